"""Jacobi sums of order-15 characters over F_{ell^4} without field tables.

When ell has order 4 modulo 15, Frobenius fixes every Jacobi sum J(chi^i, chi^j),
so J lies in the imaginary quadratic subfield L of Q(zeta_15) fixed by <ell>
(Q(sqrt-15) for ell = 2, 8 mod 15, Q(sqrt-3) for ell = 7, 13 mod 15).  It has
norm ell^4, which leaves finitely many candidates (A + B sqrt-d)/2, and
Stickelberger's congruence

    g(omega^-a) = -pi^s(a) / prod a_i!   mod pi^(s(a)+1),   pi^(ell-1) = -ell,

fixes J / ell^k modulo the prime below chi, k being the number of base-ell
carries in a + b.  That picks exactly one candidate.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .cyclo import Cyc
from .ffield import cyclotomic_factors, pmod, ppowmod
from .kfield import multiplicative_order

N = 15
# J(chi^i, chi^j) = g g / g, each g carrying a leading minus sign
_SIGN = -1


def _subgroup(ell: int) -> frozenset:
    return frozenset(pow(ell, k, N) for k in range(multiplicative_order(ell, N)))


@lru_cache(maxsize=None)
def _sqrt_minus_d(H: frozenset) -> tuple[int, Cyc]:
    """(d, s) with s in Z[zeta_15] fixed by H and s^2 = -d."""
    units = [a for a in range(1, N) if math.gcd(a, N) == 1]
    if all(h % 3 == 1 for h in H):
        s = 1 + 2 * Cyc.zeta_power(N, 5)
        d = 3
    else:
        s = Cyc.const(N, 0)
        for a in units:
            s = s + (1 if a in H else -1) * Cyc.zeta_power(N, a)
        d = 15
    if s * s != Cyc.const(N, -d):  # pragma: no cover
        raise ArithmeticError("square root of -d not found")
    return d, s


def _reduce_at(v: Cyc, modulus, ell: int) -> list[int]:
    """Image of v under zeta -> x mod (modulus, ell)."""
    return pmod(list(v.c), list(modulus), ell)


def _digits(a: int, ell: int, f: int) -> list[int]:
    return [(a // ell ** i) % ell for i in range(f)]


def _hensel_sqrt(r: int, d: int, ell: int, k: int) -> int:
    """Lift r with r^2 = -d mod ell to a root mod ell^k."""
    mod = ell
    while mod < ell ** k:
        mod = min(mod * mod, ell ** k)
        r = (r - (r * r + d) * pow(2 * r, -1, mod)) % mod
    return r % ell ** k


def _candidates(q: int, d: int):
    """(A, B) with A^2 + d B^2 = 4q and A = B mod 2."""
    for B in range(-math.isqrt(4 * q // d), math.isqrt(4 * q // d) + 1):
        rest = 4 * q - d * B * B
        A = math.isqrt(rest)
        if A * A != rest or (A - B) % 2:
            continue
        yield A, B
        if A:
            yield -A, B


def chi_exponent_on_prime_field(ell: int, t: int, factor_index: int = 0) -> int:
    """k with t^((q-1)/15) = zeta-bar^k for t in F_ell^x (zeta-bar = x mod the factor)."""
    modulus = cyclotomic_factors(ell, N)[factor_index]
    q = ell ** (len(modulus) - 1)
    target = pow(t, (q - 1) // N, ell)
    for k in range(N):
        if ppowmod([0, 1], k, list(modulus), ell) == ([target] if target else []):
            return k
    raise ArithmeticError(f"{t} has no character value")  # pragma: no cover


def jacobi_sum_quadratic(ell: int, i: int, j: int, factor_index: int = 0) -> Cyc:
    """J(chi^i, chi^j) over F_{ell^4} for ell of order 4 mod 15, exactly."""
    f = multiplicative_order(ell, N)
    if f != 4:
        raise ValueError(f"ell = {ell} has order {f} mod 15, not 4")
    if i % N == 0 or j % N == 0 or (i + j) % N == 0:
        raise ValueError("characters and their product must be nontrivial")
    modulus = cyclotomic_factors(ell, N)[factor_index]
    q = ell ** f
    d, s = _sqrt_minus_d(_subgroup(ell))
    red = _reduce_at(s, modulus, ell)
    if len(red) > 1:  # pragma: no cover
        raise ArithmeticError("sqrt(-d) does not reduce into F_ell")
    r0 = red[0] if red else 0

    # chi^i = omega^-a with omega the Teichmueller character at this prime
    a = (-i * (q - 1) // N) % (q - 1)
    b = (-j * (q - 1) // N) % (q - 1)
    c = (a + b) % (q - 1)
    da, db, dc = (_digits(x, ell, f) for x in (a, b, c))
    carries, rem = divmod(sum(da) + sum(db) - sum(dc), ell - 1)
    if rem:  # pragma: no cover
        raise ArithmeticError("digit sums are inconsistent")
    num = math.prod(math.factorial(x) for x in dc)
    den = math.prod(math.factorial(x) for x in da + db)
    rho = _SIGN * (-1) ** carries * num * pow(den, -1, ell) % ell

    mod = ell ** (carries + 1)
    r = _hensel_sqrt(r0, d, ell, carries + 1)
    half = pow(2, -1, mod)
    hits = []
    for A, B in _candidates(q, d):
        v = (A + B * r) * half % mod
        if v % ell ** carries == 0 and (v // ell ** carries) % ell == rho:
            hits.append((A, B))
    if len(hits) != 1:
        raise ArithmeticError(f"Stickelberger selection found {len(hits)} candidates")
    A, B = hits[0]
    twice = A + B * s
    if any(x % 2 for x in twice.c):  # pragma: no cover
        raise ArithmeticError("candidate is not integral")
    return Cyc(N, [x // 2 for x in twice.c])
