"""Igusa invariants of a binary sextic and Liu's potential-good-reduction test."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..arith.padic import INF, valuation
from ..curves.models import DomainError, SexticModel

# binary forms of degree n: list a_0..a_n meaning sum a_i x^i y^(n-i)


def _dx(f):
    return [i * f[i] for i in range(1, len(f))]


def _dy(f):
    n = len(f) - 1
    return [(n - i) * f[i] for i in range(n)]


def _mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _partial(f, kx, ky):
    for _ in range(kx):
        f = _dx(f)
    for _ in range(ky):
        f = _dy(f)
    return f


def transvectant(f, g, k: int):
    """(f, g)_k with the (m-k)!(n-k)!/(m! n!) normalisation."""
    m, n = len(f) - 1, len(g) - 1
    acc = [Fraction(0)] * (m + n - 2 * k + 1)
    for j in range(k + 1):
        term = _mul(_partial(f, k - j, j), _partial(g, j, k - j))
        c = (-1) ** j * math.comb(k, j)
        for i, t in enumerate(term):
            acc[i] += c * t
    scale = Fraction(math.factorial(m - k) * math.factorial(n - k), math.factorial(m) * math.factorial(n))
    return [scale * a for a in acc]


def clebsch_invariants(coeffs) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Clebsch's A, B, C, D of the sextic with coefficients low degree first."""
    f = [Fraction(c) for c in coeffs] + [Fraction(0)] * (7 - len(coeffs))
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    A = transvectant(f, f, 6)[0]
    B = transvectant(i, i, 4)[0]
    C = transvectant(i, delta, 4)[0]
    D = transvectant(y3, y1, 2)[0]
    return A, B, C, D


def igusa_clebsch(coeffs) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    A, B, C, D = clebsch_invariants(coeffs)
    I2 = -120 * A
    I4 = -720 * A ** 2 + 6750 * B
    I6 = 8640 * A ** 3 - 108000 * A * B + 202500 * C
    I10 = (-62208 * A ** 5 + 972000 * A ** 3 * B + 1620000 * A ** 2 * C
           - 3037500 * A * B ** 2 - 6075000 * B * C - 4556250 * D)
    return I2, I4, I6, I10


@dataclass(frozen=True)
class IgusaVec:
    J2: Fraction
    J4: Fraction
    J6: Fraction
    J8: Fraction
    J10: Fraction

    def as_tuple(self):
        return (self.J2, self.J4, self.J6, self.J8, self.J10)

    def syzygy_ok(self) -> bool:
        return 4 * self.J8 == self.J2 * self.J6 - self.J4 ** 2

    def weighted_equal(self, other: "IgusaVec") -> bool:
        """Equality as points of weighted projective space with weights 1..5 (halved)."""
        a, b = self.as_tuple(), other.as_tuple()
        if any((x == 0) != (y == 0) for x, y in zip(a, b)):
            return False
        # lambda^k a_k = b_k for all k: compare cross ratios a_i^k b_k^i = a_k^i b_i^k
        w = (1, 2, 3, 4, 5)
        idx = [k for k in range(5) if a[k] != 0]
        for i in idx:
            for k in idx:
                if a[i] ** w[k] * b[k] ** w[i] != a[k] ** w[i] * b[i] ** w[k]:
                    return False
        return True


def igusa_J(model) -> IgusaVec:
    """Igusa J2..J10 of y^2 = f(x).

    The Igusa-Clebsch invariants are taken of 4f, the form that arises for
    y^2 + h y = g with h = 0; this is the normalisation under which
    c53(t) gives J2 = -1200 t^2.
    """
    coeffs = model.coeffs if isinstance(model, SexticModel) else tuple(Fraction(c) for c in model)
    if len(coeffs) - 1 < 5:
        raise DomainError("need a sextic or quintic")
    from ..arith import poly as P
    g = P.gcd(list(coeffs), P.deriv(list(coeffs)))
    if len(g) > 1:
        raise DomainError("f is not squarefree")
    I2, I4, I6, I10 = igusa_clebsch([4 * c for c in coeffs])
    J2 = I2 / 8
    J4 = (4 * J2 ** 2 - I4) / 96
    J6 = (8 * J2 ** 3 - 160 * J2 * J4 - I6) / 576
    J8 = (J2 * J6 - J4 ** 2) / 4
    J10 = I10 / 4096
    return IgusaVec(J2, J4, J6, J8, J10)


# --- Liu's criterion ---------------------------------------------------------


@dataclass(frozen=True)
class ReductionClass:
    kind: str  # potentially-good-smooth, potentially-good-split-degenerate, potentially-multiplicative, undetermined
    ell: int
    cond_I: tuple
    cond_V: tuple
    note: str = ""

    @property
    def potentially_good(self) -> bool:
        return self.kind.startswith("potentially-good")


def liu_quantities(J: IgusaVec, ell: int):
    """The five (I) values and the five (V) values; None where undefined."""
    if ell not in (3, 5):
        raise ValueError("ell must be 3 or 5")
    eps = 1 if ell == 5 else 3
    J2, J4, J6, J8, J10 = J.as_tuple()
    Js = (J2, J4, J6, J8, J10)
    vals_I = tuple(Js[i - 1] ** 5 / J10 ** i if J10 != 0 else None for i in range(1, 6))
    I4 = J2 * J2 - 24 * J4
    I12 = -8 * J4 ** 3 + 9 * J2 * J4 * J6 - 27 * J6 ** 2 - J2 * J2 * J8
    I2e = J2 / 12 if eps == 1 else J6

    def q(num, den):
        return None if den == 0 else num / den

    vals_V = (
        q(I4 ** eps, I2e ** 2),
        q(J10 ** eps, I2e ** 5),
        q(I12 ** eps, I2e ** 6),
        q(I4 ** (3 * eps), J10 ** eps * I2e),
        q(I12 ** eps, J10 ** eps * I2e),
    )
    return vals_I, vals_V


def liu_classify(J: IgusaVec, ell: int) -> ReductionClass:
    vals_I, vals_V = liu_quantities(J, ell)
    if any(v is None for v in vals_I):
        return ReductionClass("undetermined", ell, vals_I, vals_V, "J10 vanishes")
    if all(valuation(v, ell) >= 0 for v in vals_I):
        return ReductionClass("potentially-good-smooth", ell, vals_I, vals_V)
    if any(v is None for v in vals_V):
        return ReductionClass("undetermined", ell, vals_I, vals_V, "a condition-(V) denominator vanishes")
    need = (1, 1, 1, 0, 0)
    if all(valuation(v, ell) >= k for v, k in zip(vals_V, need)):
        return ReductionClass("potentially-good-split-degenerate", ell, vals_I, vals_V)
    return ReductionClass("potentially-multiplicative", ell, vals_I, vals_V)


def _v(x, p):
    return INF if x == 0 else valuation(x, p)
