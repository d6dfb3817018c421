"""Reduction type of the genus-2 curve c53(t0) at 3 and 5."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith.padic import INF, integer_root, valuation
from ..curves.models import DomainError, c53
from .igusa import ReductionClass, igusa_J, liu_classify


@dataclass(frozen=True)
class Reduction53:
    t0: Fraction
    at3: ReductionClass
    at5: ReductionClass
    guard_v3: float  # v_3(17 t0 + 108)
    guard_holds: bool
    guard_applies: bool  # t0 has the shape -a^5/c^3 with v_3(t0 - 1) = 0
    note: str = ""


def fifth_cube_shape(t0: Fraction):
    """(a, c) with t0 = -a^5/c^3 in lowest terms, or None."""
    t0 = Fraction(t0)
    a = integer_root(-t0.numerator, 5)
    c = integer_root(t0.denominator, 3)
    return None if a is None or c is None else (a, c)


def reduction_53(t0) -> Reduction53:
    t0 = Fraction(t0)
    if t0 in (0, 1):
        raise DomainError("t0 must avoid 0 and 1")
    J = igusa_J(c53(t0))
    at3, at5 = liu_classify(J, 3), liu_classify(J, 5)
    g = 17 * t0 + 108
    v3 = INF if g == 0 else valuation(g, 3)
    shape = fifth_cube_shape(t0)
    applies = shape is not None and valuation(t0 - 1, 3) == 0
    note = ""
    if shape is not None and not applies:
        note = "guard vacuous: v_3(t0 - 1) != 0"
    elif shape is None:
        note = "t0 is not of the form -a^5/c^3"
    return Reduction53(t0, at3, at5, v3, v3 <= 3, applies, note)
