"""Gauss sums, Jacobi sums and finite hypergeometric traces.

The hypergeometric trace is computed from the full table of Gauss sums of a
residue field, obtained with one FFT over the multiplicative group.  Two
evaluation levels exist:

* ``"F"``: the residue field of a prime of Q(zeta_N); every character needed
  by the parameters exists there.  The result is the trace of Frobenius at
  that prime, i.e. a power sum of the Q(sqrt5)-level eigenvalues.
* ``"K"``: the prime field F_ell itself, for ell split in Q(sqrt5).  Pairs
  {1/3, -1/3} whose characters do not exist over F_ell are rewritten with
  the Hasse-Davenport product formula, so only characters of F_ell^x occur.

All traces are reported with the weight-2 normalisation (multiplied by the
size of the residue field).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import (Cyc, Fq, KElt, PrimeSlotK, field_build, min_poly_over_Q, multiplicative_order,
                    recognize, slot_kind)
from .arith.stickelberger import chi_exponent_on_prime_field, jacobi_sum_quadratic

FIELD_SIZE_LIMIT = 10 ** 6


class RefusedError(ValueError):
    """The request is outside the supported domain."""


class RecognitionError(ArithmeticError):
    def __init__(self, msg, raw=None):
        super().__init__(msg)
        self.raw = raw


@dataclass(frozen=True)
class HGMParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def N(self) -> int:
        return math.lcm(*(x.denominator for x in (self.a, self.b, self.c, self.d)))

    def swapped(self) -> "HGMParams":
        """Exchange (a, b) and (c, d); this inverts the parameter t."""
        return HGMParams(self.c, self.d, self.a, self.b)

    @classmethod
    def parse(cls, text: str) -> "HGMParams":
        parts = [Fraction(p.strip()) for p in text.replace(";", ",").split(",") if p.strip()]
        if len(parts) != 4:
            raise ValueError("expected four rationals a,b,c,d")
        return cls(*parts)

    def __str__(self):
        return ",".join(str(x) for x in (self.a, self.b, self.c, self.d))


# (a, b, c, d) for the (5, 3) signature: realizes c53(t) at parameter t.
P53 = HGMParams(Fraction(1, 3), Fraction(-1, 3), Fraction(1, 5), Fraction(-1, 5))
# The exchanged order; realizes c53(1/t).  Traces tabulated by residue t
# in the literature use this order.
P53_SWAPPED = P53.swapped()


@dataclass(frozen=True)
class TraceValue:
    value: KElt
    q: int
    ell: int
    level: str  # "K" or "F"
    root5: int | None = None  # sqrt5 mod ell at the chosen prime, when split
    raw: tuple[float, float] = (0.0, 0.0)

    @property
    def pair(self) -> frozenset:
        return frozenset({self.value, self.value.conj()})

    def minpoly(self):
        return self.value.minpoly()


# --- characters -----------------------------------------------------------


@lru_cache(maxsize=None)
def _chi_generator_exponent(field: Fq) -> int:
    """m with chi(g) = zeta^m, i.e. g^{(q-1)/N} equals zeta-bar^m."""
    N = field.N
    target = field.power(field.gen, (field.q - 1) // N)
    for m in range(N):
        if field.power(field.zeta, m) == target:
            return m
    raise ArithmeticError("embedded root of unity not found")


def chi_lambda(field: Fq, x: int) -> int | None:
    """Exponent k in Z/N with x^{(q-1)/N} = zeta^k, or None for x = 0."""
    if x == 0:
        return None
    return (_chi_generator_exponent(field) * int(field.log[x])) % field.N


def chi_table(field: Fq) -> np.ndarray:
    """chi_lambda exponent for every nonzero code (entry 0 is -1)."""
    m = _chi_generator_exponent(field)
    out = (m * field.log) % field.N
    out[0] = -1
    return out


def char_to_omega(field: Fq, e: int) -> int:
    """Exponent k of omega_k(g^j) = exp(2 pi i jk/(q-1)) equal to chi^e."""
    return (e * _chi_generator_exponent(field) * ((field.q - 1) // field.N)) % (field.q - 1)


@lru_cache(maxsize=16)
def gauss_table(field: Fq) -> np.ndarray:
    """g(psi, omega_k) for k = 0..q-2, psi(x) = exp(2 pi i Tr(x)/ell)."""
    if field.q > FIELD_SIZE_LIMIT:
        raise RefusedError(f"field of size {field.q} exceeds the Gauss-sum budget {FIELD_SIZE_LIMIT}")
    psi = np.exp(2j * np.pi * field.trace_table[field.exp] / field.ell)
    return (field.q - 1) * np.fft.ifft(psi)


def gauss_sum(field: Fq, k: int) -> complex:
    return complex(gauss_table(field)[k % (field.q - 1)])


def jacobi_sum(field: Fq, i: int, j: int) -> Cyc:
    """J(chi^i, chi^j) = sum over x != 0, 1 of chi^i(x) chi^j(1 - x), exactly."""
    N = field.N
    codes = np.arange(2, field.q, dtype=np.int64)
    one_minus = _one_minus(field, codes)
    codes = codes[one_minus != 0]
    one_minus = one_minus[one_minus != 0]
    chi = chi_table(field)
    expo = (i * chi[codes] + j * chi[one_minus]) % N
    counts = np.bincount(expo, minlength=N)
    return Cyc.from_exponent_counts(N, [int(c) for c in counts])


def _one_minus(field: Fq, codes: np.ndarray) -> np.ndarray:
    ell = field.ell
    neg = np.zeros_like(codes)
    for i in range(field.f):
        d = (codes // ell ** i) % ell
        neg += ((ell - d) % ell) * ell ** i
    return field.vadd_const(neg, 1)


# --- hypergeometric trace --------------------------------------------------


def _pair_kind(x: Fraction, y: Fraction, q: int) -> str:
    if (q - 1) % math.lcm(x.denominator, y.denominator) == 0:
        return "direct"
    if {x % 1, y % 1} == {Fraction(1, 3), Fraction(2, 3)}:
        return "hd3"
    return "none"


def _sum_H(G: np.ndarray, q: int, t_log: int, top, bottom) -> complex:
    """1/(1-q) sum_k P_top(k) P_bottom(-k) omega_k(t).

    ``top`` and ``bottom`` are (kind, e1, e2) with e1, e2 omega-exponents of
    the characters for direct pairs.
    """
    n = q - 1
    k = np.arange(n, dtype=np.int64)
    total = _pair_factor(G, n, k, top) * _pair_factor(G, n, (-k) % n, bottom)
    total = total * np.exp(2j * np.pi * ((k * t_log) % n) / n)
    return complex(total.sum() / (1 - q))


def _pair_factor(G, n, k, pair):
    kind, e1, e2, log3 = pair
    if kind == "direct":
        return G[(k + e1) % n] * G[(k + e2) % n] / (G[e1] * G[e2])
    # g(nu theta) g(nu theta^2) / (g(theta) g(theta^2)) = nu(27)^{-1} g(nu^3)/g(nu)
    return G[(3 * k) % n] / G[k] * np.exp(-2j * np.pi * ((3 * k * log3) % n) / n)


def _k_level_ok(params: HGMParams, ell: int) -> bool:
    if slot_kind(ell) != "split":
        return False
    kinds = (_pair_kind(params.a, params.b, ell), _pair_kind(params.c, params.d, ell))
    return "none" not in kinds


def hyp_trace(params: HGMParams, ell: int, t0: int, factor_index: int = 0,
              level: str | None = None, tol: float = 1e-4) -> TraceValue:
    """Weight-2 hypergeometric trace at a prime above ell, parameter t0 mod ell.

    ``level`` is "K", "F" or None (prefer "K" when available).  The value is
    recognised in (1/2)Z[sqrt5] from its two real embeddings.
    """
    if params.N % ell == 0:
        raise RefusedError(f"ell = {ell} divides N = {params.N}")
    t0 %= ell
    if t0 in (0, 1):
        raise RefusedError("t0 reduces to 0 or 1; use the degenerate formulas")
    if level is None:
        level = "K" if _k_level_ok(params, ell) else "F"
    if level == "K":
        if not _k_level_ok(params, ell):
            raise RefusedError(f"no prime-field evaluation for these parameters at ell = {ell}")
        return _hyp_trace_K(params, ell, t0, factor_index, tol)
    if level != "F":
        raise ValueError(f"unknown level {level!r}")
    return _hyp_trace_F(params, ell, t0, factor_index, tol)


def _hyp_trace_F(params, ell, t0, factor_index, tol):
    N = params.N
    field = field_build(ell, N, factor_index)
    if field.q > FIELD_SIZE_LIMIT:
        raise RefusedError(f"residue field of size {field.q} exceeds {FIELD_SIZE_LIMIT}")
    G = gauss_table(field)
    t_log = int(field.log[t0])
    vals = []
    for twist in _conjugating_twists(N):
        def om(x):
            return char_to_omega(field, int(x * N) * twist)
        top = ("direct", om(-params.a), om(-params.b), 0)
        bottom = ("direct", om(params.c), om(params.d), 0)
        vals.append(_sum_H(G, field.q, t_log, top, bottom) * field.q)
    return _finish(vals, field.q, ell, "F", _root5(field) if slot_kind(ell) == "split" else None, tol)


def _hyp_trace_K(params, ell, t0, factor_index, tol):
    pairs = [(params.a, params.b), (params.c, params.d)]
    kinds = [_pair_kind(x, y, ell) for x, y in pairs]
    Nd = math.lcm(1, *(math.lcm(x.denominator, y.denominator)
                       for (x, y), kd in zip(pairs, kinds) if kd == "direct"))
    field = field_build(ell, Nd, factor_index)
    G = gauss_table(field)
    log3 = int(field.log[3 % ell])
    t_log = int(field.log[t0])
    M = field.N
    vals = []
    for twist in _conjugating_twists(M):
        specs = []
        for sgn, (x, y), kd in zip((-1, 1), pairs, kinds):
            if kd == "direct":
                specs.append(("direct", char_to_omega(field, sgn * int(x * M) * twist),
                              char_to_omega(field, sgn * int(y * M) * twist), 0))
            else:
                specs.append(("hd3", 0, 0, log3))
        vals.append(_sum_H(G, field.q, t_log, specs[0], specs[1]) * field.q)
    return _finish(vals, field.q, ell, "K", _root5(field), tol)


def _conjugating_twists(N: int) -> tuple[int, int]:
    """Exponent 1 and one exponent acting as sqrt5 -> -sqrt5 on Q(zeta_N)."""
    if N % 5:
        return (1, 1)
    for k in range(2, N):
        if math.gcd(k, N) == 1 and k % 5 in (2, 3):
            return (1, k)
    raise ArithmeticError("no conjugating exponent")


def _root5(field: Fq) -> int | None:
    """Image of sqrt5 at the chosen prime: 1 + 2(z + 1/z) with z of order 5."""
    if field.f != 1 or field.N % 5:
        return None
    z = field.power(field.zeta, field.N // 5)
    return (1 + 2 * (z + pow(z, -1, field.ell))) % field.ell


def _finish(vals, q, ell, level, root5, tol) -> TraceValue:
    x1, x2 = vals
    raw = (x1.real, x2.real)
    if max(abs(x1.imag), abs(x2.imag)) > tol:
        raise RecognitionError(f"trace is not real: {x1}, {x2}", raw=(x1, x2))
    try:
        val = recognize(x1.real, x2.real, tol)
    except ValueError as exc:
        raise RecognitionError(str(exc), raw=(x1, x2)) from None
    if not val.weil_ok(q):
        raise RecognitionError(f"{val} violates the Weil bound for q = {q}", raw=(x1, x2))
    return TraceValue(val, q, ell, level, root5, raw)


# --- exact CM and degenerate traces ----------------------------------------


def _check_cm_params(params: HGMParams):
    a, b, c, d = params.a, params.b, params.c, params.d
    if (a + b).denominator != 1 or (c + d).denominator != 1:
        raise RefusedError("CM formula needs a + b and c + d integral")
    if (c - d).denominator == 1:
        raise RefusedError("CM formula needs c - d non-integral")
    for x in (a, b):
        for y in (c, d):
            if (x - y).denominator == 1:
                raise RefusedError("parameters are not generic (a top and bottom entry agree mod Z)")


def cm_trace(params: HGMParams, ell: int, factor_index: int = 0) -> Cyc:
    """Weight-2 trace at t = 0 for CM parameters, exactly in Z[zeta_N]."""
    _check_cm_params(params)
    N = params.N
    if N % ell == 0:
        raise RefusedError(f"ell = {ell} divides N = {N}")
    field = field_build(ell, N, factor_index)
    q = field.q
    a, b, c, d = params.a, params.b, params.c, params.d
    eps = -1 if (a.denominator != 1 and c.denominator != 1) else 0
    chim1 = chi_lambda(field, field.neg(1))
    i1, j1 = int((d - b) * N), int((b - c) * N)
    i2, j2 = int((d - c) * N), int((a - d) * N)
    inner = jacobi_sum(field, i1, j1) + Cyc.zeta_power(N, chim1 * j1) * jacobi_sum(field, i2, j2)
    pref_exp = int((d - b) * (q - 1)) * chim1
    val = -(Cyc.zeta_power(N, pref_exp) * inner)
    if eps == 0:
        val = val * q
    return val


def cm_index_pairs(params: HGMParams) -> tuple[tuple[int, int], tuple[int, int]]:
    N = params.N
    a, b, c, d = params.a, params.b, params.c, params.d
    return ((int((d - b) * N), int((b - c) * N)), (int((d - c) * N), int((a - d) * N)))


def _degenerate(ell: int, factor_index: int, twist: int, j1, j2, route: str = "auto") -> dict:
    if ell in (2, 3, 5):
        raise RefusedError(f"ell = {ell} divides 30")
    f = multiplicative_order(ell, 15)
    if route == "auto":
        route = "direct" if ell ** f <= FIELD_SIZE_LIMIT else "stickelberger"
    if route == "direct":
        if ell ** f > FIELD_SIZE_LIMIT:
            raise RefusedError(f"residue field of size {ell ** f} exceeds {FIELD_SIZE_LIMIT}")
        field = field_build(ell, 15, factor_index)
        J1 = jacobi_sum(field, *j1)
        J2 = jacobi_sum(field, *j2)
        chi = [None] + [chi_lambda(field, t) for t in range(1, ell)]
    elif route == "stickelberger":
        if f != 4:
            raise RefusedError(f"the quadratic-subfield route needs ell of order 4 mod 15, not {f}")
        J1 = jacobi_sum_quadratic(ell, *j1, factor_index=factor_index)
        J2 = jacobi_sum_quadratic(ell, *j2, factor_index=factor_index)
        chi = [None] + [chi_exponent_on_prime_field(ell, t, factor_index) for t in range(1, ell)]
    else:
        raise ValueError(f"unknown route {route!r}")
    out = {}
    for t in range(1, ell):
        e = chi[t]
        out[t] = -(Cyc.zeta_power(15, -twist * e) * J1 + Cyc.zeta_power(15, twist * e) * J2)
    return out


def degenerate0_values(ell: int, factor_index: int = 0, route: str = "auto") -> dict:
    """t~ -> exact weight-2 trace for t0 reducing to 0 (all t~ in F_ell^x).

    ``route`` is "direct" (Jacobi sums over the residue field), "stickelberger"
    (ell of order 4 mod 15 only, no field tables) or "auto".
    """
    return _degenerate(ell, factor_index, 3, (2, -8), (-6, 8), route)


def degenerate_inf_values(ell: int, factor_index: int = 0, route: str = "auto") -> dict:
    return _degenerate(ell, factor_index, 5, (2, 8), (10, -8), route)


def _minpoly_set(values: dict, bound: int) -> list[tuple[int, ...]]:
    polys = sorted({min_poly_over_Q(v) for v in values.values()})
    if len(polys) > bound:
        raise ArithmeticError(f"{len(polys)} distinct values, more than the bound {bound}")
    return polys


def degenerate0(ell: int, factor_index: int = 0, route: str = "auto") -> list[tuple[int, ...]]:
    return _minpoly_set(degenerate0_values(ell, factor_index, route), 5)


def degenerate_inf(ell: int, factor_index: int = 0, route: str = "auto") -> list[tuple[int, ...]]:
    return _minpoly_set(degenerate_inf_values(ell, factor_index, route), 3)


def lift_trace(a, q: int, d: int):
    """Trace of Frob^d from the trace a of Frob (eigenvalue product q)."""
    if d == 1:
        return a
    if d == 2:
        return a * a - 2 * q
    if d == 4:
        s = a * a - 2 * q
        return s * s - 2 * q * q
    raise RefusedError(f"relative degree {d} not in (1, 2, 4)")


def slot_for_trace(tv: TraceValue) -> PrimeSlotK:
    if tv.root5 is not None:
        return PrimeSlotK.over(tv.ell, tv.root5)
    return PrimeSlotK.over(tv.ell)


__all__ = [
    "HGMParams", "P53", "P53_SWAPPED", "TraceValue", "RefusedError", "RecognitionError",
    "chi_lambda", "gauss_sum", "gauss_table", "jacobi_sum", "hyp_trace", "cm_trace",
    "cm_index_pairs", "degenerate0", "degenerate_inf", "degenerate0_values",
    "degenerate_inf_values", "lift_trace", "FIELD_SIZE_LIMIT",
]
