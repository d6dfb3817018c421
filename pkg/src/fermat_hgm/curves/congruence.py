"""Comparing Frobenius polynomials of two models modulo 3 or modulo sqrt5."""
from __future__ import annotations

from dataclasses import dataclass

from ..arith import PrimeSlotK
from ..arith import poly as P
from .models import EllipticModel, SexticModel
from .points import BadReductionError, elliptic_charpoly, euler_factor


@dataclass(frozen=True)
class SlotCheck:
    slot: str
    norm: int
    status: str  # pass, fail, skipped
    lhs: tuple = ()
    rhs: tuple = ()
    note: str = ""


def _charpoly(model, q: int) -> list[int]:
    if isinstance(model, SexticModel):
        return euler_factor(model, q).charpoly()
    if isinstance(model, EllipticModel):
        return elliptic_charpoly(model, q)
    raise TypeError(type(model).__name__)


def twist(charpoly: list[int], q: int) -> list[int]:
    """Substitute x -> q x."""
    return [c * q ** i for i, c in enumerate(charpoly)]


def _mod(p, m) -> tuple:
    return tuple(c % m for c in P.trim([c % m for c in p]))


def congruence_check(model_a, model_b, modulus, slots, tate_twist: bool = True) -> list[SlotCheck]:
    """Per-slot comparison of Frobenius polynomials.

    modulus 3: the twisted quartic of ``model_a`` against the quartic of
    ``model_b``, coefficients mod 3.
    modulus "sqrt5": the twisted quartic of ``model_a`` mod 5 against the
    square of the quadratic of the elliptic ``model_b``.
    With ``tate_twist=False`` the quartic of ``model_a`` is used as is.
    """
    if modulus not in (3, "sqrt5"):
        raise ValueError("modulus must be 3 or 'sqrt5'")
    out = []
    for s in slots:
        if not isinstance(s, PrimeSlotK):
            s = PrimeSlotK.over(int(s))
        q = s.norm
        try:
            a = _charpoly(model_a, q)
            if tate_twist:
                a = twist(a, q)
            b = _charpoly(model_b, q)
        except BadReductionError as e:
            out.append(SlotCheck(s.label(), q, "skipped", note=str(e)))
            continue
        if modulus == 3:
            lhs, rhs = _mod(a, 3), _mod(b, 3)
        else:
            if isinstance(model_b, EllipticModel):
                b = P.mul(b, b)
            lhs, rhs = _mod(a, 5), _mod(b, 5)
        out.append(SlotCheck(s.label(), q, "pass" if lhs == rhs else "fail", lhs, rhs))
    return out
