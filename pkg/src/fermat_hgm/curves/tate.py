"""Tate's algorithm over Q, including the residue characteristics 2 and 3."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith.padic import factorize, valuation
from .models import EllipticModel


@dataclass(frozen=True)
class LocalData:
    p: int
    kodaira: str
    f_p: int
    v_delta: int
    reduction: str  # good, multiplicative-split, multiplicative-nonsplit, additive
    tamagawa: int
    model: EllipticModel

    def __str__(self):
        return f"p={self.p} {self.kodaira} f={self.f_p} v(disc)={self.v_delta} {self.reduction}"


def _v(x, p) -> float:
    return valuation(x, p)


def _red(x: Fraction, p: int) -> int:
    """Residue of a p-integral rational."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ArithmeticError(f"{x} is not {p}-integral")
    return x.numerator * pow(x.denominator, -1, p) % p


def _quad_has_root(a, b, c, p: int) -> bool:
    """Does a x^2 + b x + c have a root in F_p (a, b, c p-integral)."""
    a, b, c = _red(a, p), _red(b, p), _red(c, p)
    if p == 2:
        return any((a * x * x + b * x + c) % 2 == 0 for x in (0, 1))
    if a == 0:
        return b != 0 or c == 0
    d = (b * b - 4 * a * c) % p
    return d == 0 or pow(d, (p - 1) // 2, p) == 1


def _cubic_roots(b, c, d, p: int) -> int:
    b, c, d = _red(b, p), _red(c, p), _red(d, p)
    if p < 2000:
        return sum(1 for x in range(p) if (x ** 3 + b * x * x + c * x + d) % p == 0)
    raise NotImplementedError("root count of the cubic needs a small prime")


def _make_integral(E: EllipticModel, p: int) -> EllipticModel:
    while any(_v(a, p) < 0 for a in E.ainvs() if a != 0):
        E = E.scale(Fraction(1, p))
    return E


def tate_algorithm(E: EllipticModel, p: int) -> LocalData:
    E = _make_integral(E, p)
    p2 = p == 2
    p3 = p == 3
    half = pow(2, -1, p) if not p2 else None
    while True:
        a1, a2, a3, a4, a6 = E.ainvs()
        b2, b4, b6, b8 = E.b_invariants()
        c4, c6 = E.c_invariants()
        n = _v(E.discriminant(), p)
        if n == 0:
            return LocalData(p, "I0", 0, 0, "good", 1, E)

        # move the singular point to (0, 0)
        if p2:
            if _v(b2, p) > 0:
                r = _red(a4, 2)
                t = _red(((r + a2) * r + a4) * r + a6, 2)
            else:
                r = _red(a3, 2)
                t = _red(a4 + r * r, 2)
        elif p3:
            r = _red(-b6, 3) if _v(b2, p) > 0 else _red(-b2 * b4, 3)
            t = _red(a1 * r + a3, 3)
        else:
            if _v(c4, p) > 0:
                r = _red(-b2 * pow(12, -1, p), p)
            else:
                r = _red(-(c6 + b2 * c4) / (12 * c4), p)
            t = _red(-half * (a1 * r + a3), p)
        E = E.rst(r, 0, t)
        a1, a2, a3, a4, a6 = E.ainvs()
        b2, b4, b6, b8 = E.b_invariants()

        if _v(c4, p) == 0:
            split = _quad_has_root(1, a1, -a2, p)
            cp = n if split else (2 if n % 2 == 0 else 1)
            kind = "multiplicative-split" if split else "multiplicative-nonsplit"
            return LocalData(p, f"I{n}", 1, n, kind, cp, E)
        if _v(a6, p) < 2:
            return LocalData(p, "II", n, n, "additive", 1, E)
        if _v(b8, p) < 3:
            return LocalData(p, "III", n - 1, n, "additive", 2, E)
        if _v(b6, p) < 3:
            cp = 3 if _quad_has_root(1, a3 / p, -a6 / p ** 2, p) else 1
            return LocalData(p, "IV", n - 2, n, "additive", cp, E)

        # arrange p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p2:
            s = _red(a2, 2)
            t = 2 * _red(a6 / 4, 2)
        else:
            s = -a1 / 2
            t = -a3 / 2
        E = E.rst(0, s, t)
        a1, a2, a3, a4, a6 = E.ainvs()

        b = a2 / p
        c = a4 / p ** 2
        d = a6 / p ** 3
        w = 27 * d * d - b * b * c * c + 4 * b ** 3 * d - 18 * b * c * d + 4 * c ** 3
        x = 3 * c - b * b
        if _v(w, p) == 0:
            cp = 1 + _cubic_roots(b, c, d, p)
            return LocalData(p, "I0*", n - 4, n, "additive", cp, E)

        if _v(x, p) == 0:
            # double root: move it to 0
            if p2:
                r = _red(c, 2)
            elif p3:
                r = _red(b * c, 3)
            else:
                r = _red((b * c - 9 * d) / (2 * x), p)
            E = E.rst(p * r, 0, 0)
            ix = iy = 3
            mx = my = p * p
            while True:
                a1, a2, a3, a4, a6 = E.ainvs()
                a2t = a2 / p
                a3t = a3 / my
                a4t = a4 / (p * mx)
                a6t = a6 / (mx * my)
                if _v(a3t * a3t + 4 * a6t, p) == 0:
                    cp = 4 if _quad_has_root(1, a3t, -a6t, p) else 2
                    break
                t = my * (_red(a6t, 2) if p2 else _red(-a3t * half, p))
                E = E.rst(0, 0, t)
                a1, a2, a3, a4, a6 = E.ainvs()
                my *= p
                iy += 1
                a2t = a2 / p
                a3t = a3 / my
                a4t = a4 / (p * mx)
                a6t = a6 / (mx * my)
                if _v(a4t * a4t - 4 * a6t * a2t, p) == 0:
                    cp = 4 if _quad_has_root(a2t, a4t, a6t, p) else 2
                    break
                if p2:
                    r = mx * _red(a6t * pow(_red(a2t, 2), -1, 2), 2)
                else:
                    r = mx * _red(-a4t / (2 * a2t), p)
                E = E.rst(r, 0, 0)
                mx *= p
                ix += 1
            m = ix + iy - 5
            return LocalData(p, f"I{m}*", n - m - 4, n, "additive", cp, E)

        # triple root: move it to 0
        if p2:
            r = _red(b, 2)
        elif p3:
            r = _red(-d, 3)
        else:
            r = _red(-b / 3, p)
        E = E.rst(p * r, 0, 0)
        a1, a2, a3, a4, a6 = E.ainvs()
        x3 = a3 / p ** 2
        x6 = a6 / p ** 4
        if _v(x3 * x3 + 4 * x6, p) == 0:
            cp = 3 if _quad_has_root(1, x3, -x6, p) else 1
            return LocalData(p, "IV*", n - 6, n, "additive", cp, E)
        t = p * p * (_red(x6, 2) if p2 else _red(-x3 * half, p))
        E = E.rst(0, 0, t)
        a1, a2, a3, a4, a6 = E.ainvs()
        if _v(a4, p) < 4:
            return LocalData(p, "III*", n - 7, n, "additive", 2, E)
        if _v(a6, p) < 6:
            return LocalData(p, "II*", n - 8, n, "additive", 1, E)
        # not minimal
        E = E.scale(p)


def conductor(E: EllipticModel) -> tuple[int, dict[int, LocalData]]:
    """Global conductor and the local data at every bad prime."""
    E = E.integral_model()
    disc = E.discriminant()
    primes = sorted(set(factorize(disc.numerator)) | set(factorize(disc.denominator)))
    N, local = 1, {}
    for p in primes:
        ld = tate_algorithm(E, p)
        if ld.f_p:
            local[p] = ld
            N *= p ** ld.f_p
    return N, local


def minimal_disc_valuation(E: EllipticModel, p: int) -> int:
    return tate_algorithm(E, p).v_delta

