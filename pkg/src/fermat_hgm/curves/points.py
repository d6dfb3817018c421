"""Point counts over finite fields and the resulting local factors."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..arith import KElt, field_extension
from ..arith.ffield import pgcd
from ..arith.kfield import is_prime
from ..hgmsum import FIELD_SIZE_LIMIT, RefusedError
from .models import EllipticModel, SexticModel


class BadReductionError(ValueError):
    """The model is singular (or not integral) modulo the prime."""


def _reduce_coeff(c: Fraction, ell: int) -> int:
    if c.denominator % ell == 0:
        raise BadReductionError(f"coefficient {c} is not {ell}-integral")
    return c.numerator * pow(c.denominator, -1, ell) % ell


def _split_q(q: int) -> tuple[int, int]:
    for ell in range(2, int(math.isqrt(q)) + 2):
        if q % ell == 0:
            break
    else:
        ell = q
    k, m = 0, q
    while m % ell == 0:
        m //= ell
        k += 1
    if m != 1 or not is_prime(ell):
        raise ValueError(f"{q} is not a prime power")
    return ell, k


def _poly_values(field, coeffs: list[int]) -> np.ndarray:
    """f(x) for every x in the field, as codes (coefficients in the prime field)."""
    xs = np.arange(field.q, dtype=np.int64)
    acc = np.zeros(field.q, dtype=np.int64)
    for c in reversed(coeffs):
        acc = field.vadd_const(field.vmul(acc, xs), c)
    return acc


def _squarefree_mod(coeffs: list[int], ell: int) -> bool:
    f = [c % ell for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    df = [(i * f[i]) % ell for i in range(1, len(f))]
    while df and df[-1] == 0:
        df.pop()
    if not df:
        return False
    return len(pgcd(f, df, ell)) == 1


def count_points(model, q: int) -> int:
    """#C(F_q) on the smooth projective model.

    For a sextic the count includes the one or two points at infinity; the
    reduction must stay squarefree of degree 5 or 6.  Elliptic models are
    square-completed, which needs odd characteristic.
    """
    ell, k = _split_q(q)
    if q > FIELD_SIZE_LIMIT:
        raise RefusedError(f"field of size {q} exceeds {FIELD_SIZE_LIMIT}")
    if ell == 2:
        raise RefusedError("characteristic 2 point counts are not supported")
    if isinstance(model, EllipticModel):
        cubic = [_reduce_coeff(c, ell) for c in model.rhs_cubic()]
        if not _squarefree_mod(cubic, ell):
            raise BadReductionError(f"{model.name} has bad reduction at {ell}")
        field = field_extension(ell, k)
        vals = _poly_values(field, cubic)
        return int(field.q + field.chi2_table()[vals].sum()) + 1
    if isinstance(model, SexticModel):
        f = [_reduce_coeff(c, ell) for c in model.coeffs]
        while f and f[-1] == 0:
            f.pop()
        deg = len(f) - 1
        if deg < 5 or not _squarefree_mod(f, ell):
            raise BadReductionError(f"{model.name} has bad reduction at {ell}")
        field = field_extension(ell, k)
        chi = field.chi2_table()
        affine = int(field.q + chi[_poly_values(field, f)].sum())
        if deg == 5:
            return affine + 1
        lead = f[-1]
        return affine + 1 + int(chi[lead])
    raise TypeError(f"cannot count points on {type(model).__name__}")


@dataclass(frozen=True)
class LPoly2:
    """x^4 - a1 x^3 + a2 x^2 - q a1 x + q^2, the Frobenius polynomial of a genus-2 curve."""

    q: int
    a1: int
    a2: int

    def charpoly(self) -> list[int]:
        """Low degree first."""
        return [self.q * self.q, -self.q * self.a1, self.a2, -self.a1, 1]

    def __str__(self):
        from ..arith.poly import to_str
        return to_str(self.charpoly())


def euler_factor(model: SexticModel, q: int) -> LPoly2:
    n1 = count_points(model, q)
    n2 = count_points(model, q * q)
    s1 = q + 1 - n1
    s2 = q * q + 1 - n2
    a2 = (s1 * s1 - s2) // 2
    return LPoly2(q, s1, a2)


def split_over_K(lp: LPoly2) -> tuple[KElt, KElt]:
    """Factor the quartic as (x^2 - a x + q)(x^2 - a' x + q) with a, a' in Q(sqrt5).

    a + a' = a1 and a a' = a2 - 2q.  Raises if the traces are not in Q(sqrt5).
    """
    disc = lp.a1 * lp.a1 - 4 * (lp.a2 - 2 * lp.q)
    if disc < 0:
        raise ArithmeticError(f"traces of {lp} are not real")
    s = math.isqrt(disc)
    if s * s == disc:
        roots = (KElt(lp.a1 + s, 0), KElt(lp.a1 - s, 0))
    elif disc % 5 == 0 and math.isqrt(disc // 5) ** 2 == disc // 5:
        w = math.isqrt(disc // 5)
        roots = (KElt(lp.a1, w), KElt(lp.a1, -w))
    else:
        raise ArithmeticError(f"traces of {lp} do not lie in Q(sqrt5)")
    return roots


def elliptic_charpoly(model: EllipticModel, q: int) -> list[int]:
    """x^2 - a x + q, low degree first."""
    a = q + 1 - count_points(model, q)
    return [q, -a, 1]
