"""Explicit curve models: genus-2 sextics y^2 = f(x) and Weierstrass cubics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..arith import Cyc, min_poly_over_Q
from ..arith import poly as P
from ..arith.padic import valuation


class DomainError(ValueError):
    """Parameter outside the family's domain."""


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class SexticModel:
    """y^2 = f(x), coefficients low degree first."""

    coeffs: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_fr(c) for c in P.trim(self.coeffs)))
        if len(self.coeffs) - 1 > 6:
            raise DomainError("degree above 6")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def int_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise DomainError(f"{self.name or 'model'} is not integral; clear denominators first")
        return [int(c) for c in self.coeffs]

    def __str__(self):
        return "y^2 = " + P.to_str([c.numerator if c.denominator == 1 else c for c in self.coeffs])


@dataclass(frozen=True)
class EllipticModel:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    name: str = ""

    def __post_init__(self):
        for k in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, k, _fr(getattr(self, k)))
        if self.discriminant() == 0:
            raise DomainError(f"singular curve {self.ainvs()}")

    def ainvs(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.ainvs()
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        return b2 * b2 - 24 * b4, -b2 ** 3 + 36 * b2 * b4 - 216 * b6

    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j_invariant(self) -> Fraction:
        c4, _ = self.c_invariants()
        return c4 ** 3 / self.discriminant()

    def rst(self, r=0, s=0, t=0) -> "EllipticModel":
        """Model after x = x' + r, y = y' + s x' + t."""
        a1, a2, a3, a4, a6 = self.ainvs()
        r, s, t = _fr(r), _fr(s), _fr(t)
        return EllipticModel(
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1,
            self.name,
        )

    def scale(self, u) -> "EllipticModel":
        """Model with a_i replaced by a_i / u^i."""
        u = _fr(u)
        return EllipticModel(self.a1 / u, self.a2 / u ** 2, self.a3 / u ** 3, self.a4 / u ** 4,
                             self.a6 / u ** 6, self.name)

    def integral_model(self) -> "EllipticModel":
        """Smallest u = prod of primes such that a_i * u^i are integers."""
        den = 1
        for a in self.ainvs():
            den = den * a.denominator // math.gcd(den, a.denominator)
        e = self
        for p, _ in _factor_small(den):
            while any(valuation(x, p) < 0 for x in e.ainvs() if x != 0):
                e = e.scale(Fraction(1, p))
        return e

    def rhs_cubic(self) -> list[Fraction]:
        """4x^3 + b2 x^2 + 2 b4 x + b6, the square-completed right side (times 4)."""
        b2, b4, b6, _ = self.b_invariants()
        return [b6, 2 * b4, b2, Fraction(4)]

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.ainvs()) + "]"


def _factor_small(n: int):
    from ..arith.padic import factorize
    return sorted(factorize(n).items()) if n > 1 else []


# --- polynomials attached to the signature ---------------------------------


@lru_cache(maxsize=None)
def build_f_r(r: int) -> tuple[int, ...]:
    """f(x) = (-1)^{(r-1)/2} x h(2 - x^2), h the minimal polynomial of zeta_r + 1/zeta_r."""
    if r < 3 or r % 2 == 0:
        raise DomainError("r must be an odd prime")
    z = Cyc.zeta_power(r, 1) + Cyc.zeta_power(r, -1)
    h = list(min_poly_over_Q(z))
    f = P.mul([0, 1], P.compose(h, [2, 0, -1]))
    if (r - 1) // 2 % 2:
        f = [-c for c in f]
    return tuple(int(c) for c in f)


def F_integral(q: int, r: int, a: int, c: int) -> list[int]:
    """F(x) = c^r f_r(x/c) + 2c^r + 4a^q."""
    f = build_f_r(r)
    out = [f[i] * c ** (r - i) for i in range(len(f))]
    out[0] += 2 * c ** r + 4 * a ** q
    return P.trim(out)


# --- genus-2 families --------------------------------------------------------


def _check_t(t, bad=(0, 1)):
    t = _fr(t)
    if t in bad:
        raise DomainError(f"t = {t} is a degenerate fibre")
    return t


def c53(t) -> SexticModel:
    t = _check_t(t)
    return SexticModel((t * t, 0, 0, 10 * t, 0, -12, 5), f"c53({t})")


def cv25b(t) -> SexticModel:
    """y^2 + h y = g with h = x^3 + t(1-t)^2, g = 2t(1-t)^2 x^3 + 3t^2(1-t)^3 x + t^2(1-t)^4,
    returned as Y^2 = h^2 + 4g."""
    t = _check_t(t)
    s = 1 - t
    h = [t * s * s, 0, 0, Fraction(1)]
    g = [t * t * s ** 4, 3 * t * t * s ** 3, 0, 2 * t * s * s]
    return SexticModel(tuple(P.add(P.mul(h, h), P.scale(g, 4))), f"cv25b({t})")


def darmon_minus(r: int, t) -> SexticModel:
    t = _check_t(t)
    f = [Fraction(c) for c in build_f_r(r)]
    f[0] += 2 - 4 * t
    return SexticModel(tuple(f), f"darmon_minus({r},{t})")


def darmon_plus(r: int, t) -> SexticModel:
    t = _check_t(t)
    f = [Fraction(c) for c in build_f_r(r)]
    f[0] += 2 - 4 * t
    return SexticModel(tuple(P.mul([2, 1], f)), f"darmon_plus({r},{t})")


def integral_model(m: SexticModel) -> SexticModel:
    """Clear denominators by x = X/k, y = Y/k^3 with the least such k."""
    deg = 6
    k = 1
    while True:
        cs = [c * k ** (deg - i) for i, c in enumerate(m.coeffs)]
        if all(c.denominator == 1 for c in cs):
            return SexticModel(tuple(cs), m.name + f" [x=X/{k}]")
        k += 1


def euler_sextic_c5(t) -> SexticModel:
    """The integral form of darmon_plus(5, t)."""
    return integral_model(darmon_plus(5, t))


# --- elliptic families -------------------------------------------------------


def e3_plus(t) -> EllipticModel:
    t = _check_t(t)
    return EllipticModel(3, 0, t, 0, 0, f"E3+({t})")


def e3_minus(t) -> EllipticModel:
    t = _check_t(t)
    return EllipticModel(0, 0, 0, -3, 4 * t - 2, f"E3-({t})")


def e2(t) -> EllipticModel:
    t = _check_t(t)
    return EllipticModel(1, 0, 0, t / 64, 0, f"E2({t})")


def frey_ppp(t) -> EllipticModel:
    """y^2 = x(x-1)(1-tx), moved to Weierstrass form by X = -t x, Y = -t y."""
    t = _check_t(t)
    # y^2 = A x^3 + B x^2 + C x with A = -t, B = 1 + t, C = -1
    A, B, C = -t, 1 + t, Fraction(-1)
    return EllipticModel(0, B, 0, A * C, 0, f"frey_ppp({t})")


def e_t_remark25(t) -> EllipticModel:
    t = _check_t(t, bad=(0,))
    return EllipticModel(1, 0, 0, 0, -t / 432, f"E_t({t})")


ELLIPTIC_FAMILIES = {
    "e3_plus": e3_plus,
    "e3_minus": e3_minus,
    "e2": e2,
    "frey_ppp": frey_ppp,
    "e_t": e_t_remark25,
}

SEXTIC_FAMILIES = {
    "c53": c53,
    "cv25b": cv25b,
    "darmon_plus5": lambda t: darmon_plus(5, t),
    "darmon_minus5": lambda t: darmon_minus(5, t),
    "darmon_plus5_int": euler_sextic_c5,
}
