"""The three kinds of trace a solution can produce at a prime slot.

Case 1: t0 reduces to a residue other than 0, 1; the trace is that of the
curve c53 at the residue (both routes).  Case 2: t0 reduces to 0 or
infinity; the values are the degenerate sums, which live in Q(zeta_15).
Case 3: multiplicative reduction, a trace of +-(N + 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..arith import KElt, PrimeSlotK
from ..arith import poly as P
from ..curves.models import c53
from ..curves.points import euler_factor, split_over_K
from ..hgmsum import (P53_SWAPPED, RecognitionError, RefusedError, degenerate0, degenerate_inf,
                      hyp_trace, lift_trace)

DEFAULT_NORM_CAP = 400


class OracleDisagreement(ArithmeticError):
    """The point-count and Gauss-sum routes gave different traces."""

    def __init__(self, msg, count=None, gauss=None):
        super().__init__(msg)
        self.count = count
        self.gauss = gauss


def _check_slot(slot: PrimeSlotK, cap: int):
    if slot.ell in (2, 3, 5):
        raise RefusedError(f"slot {slot.label()} lies over a prime dividing 30")
    if slot.norm > cap:
        raise RefusedError(f"slot norm {slot.norm} exceeds the cap {cap}")


def pair_poly(pair) -> tuple[int, ...]:
    """(x - a)(x - a') for the two K-values of a conjugate pair."""
    a, b = tuple(pair) if len(pair) == 2 else (next(iter(pair)),) * 2
    s, p = a + b, a * b
    if not (s.is_rational() and p.is_rational()):
        raise ArithmeticError(f"{a}, {b} is not a rational pair")
    return (p.u // 2, -(s.u // 2), 1)


@dataclass(frozen=True)
class Case1Entry:
    residue: int
    pair: tuple  # (a, a') in K, a + a' and a a' rational
    route: str  # "count+gauss" or "count"
    gauss_level: str | None = None

    def poly(self) -> tuple[int, ...]:
        return pair_poly(self.pair)

    def minpoly(self) -> tuple[int, ...]:
        return tuple(int(c) for c in P.squarefree_part(list(self.poly())))


def _lifted_pair(pair, q: int, d: int) -> frozenset:
    return frozenset(lift_trace(a, q, d) for a in pair)


def case1_entry(slot: PrimeSlotK, residue: int, cross_check: bool = True) -> Case1Entry:
    """Case-1 value at a residue, in the residue order of the tabulated traces
    (the curve is c53(1/t), the hypergeometric parameters the exchanged set)."""
    ell = slot.ell
    residue %= ell
    if residue in (0, 1):
        raise RefusedError("residues 0 and 1 belong to Cases 2 and 3")
    lp = euler_factor(c53(Fraction(1, residue)), slot.norm)
    pair = tuple(sorted(split_over_K(lp)))
    if not cross_check:
        return Case1Entry(residue, pair, "count")
    try:
        tv = hyp_trace(P53_SWAPPED, ell, residue)
    except RefusedError:
        return Case1Entry(residue, pair, "count")
    except RecognitionError as e:
        raise OracleDisagreement(f"Gauss-sum route failed at {slot.label()}, t = {residue}: {e}",
                                 count=pair, gauss=e.raw) from None
    if tv.level == "K" and slot.kind == "split":
        mine = frozenset(pair)
    else:
        d = tv.q // slot.norm if tv.q % slot.norm == 0 else 0
        d = {1: 1, slot.norm: 2, slot.norm ** 3: 4}.get(d, 0)
        if d == 0:
            raise ArithmeticError(f"field size {tv.q} is not a power of {slot.norm}")
        mine = _lifted_pair(pair, slot.norm, d)
    if mine != tv.pair:
        raise OracleDisagreement(
            f"routes disagree at {slot.label()}, t = {residue}: count {sorted(map(str, mine))}, "
            f"gauss {sorted(map(str, tv.pair))} (raw {tv.raw})", count=pair, gauss=tv.raw)
    return Case1Entry(residue, pair, "count+gauss", tv.level)


@lru_cache(maxsize=None)
def case1_values(slot: PrimeSlotK, cross_check: bool = True,
                 cap: int = DEFAULT_NORM_CAP) -> dict[int, Case1Entry]:
    _check_slot(slot, cap)
    return {t: case1_entry(slot, t, cross_check) for t in range(2, slot.ell)}


@lru_cache(maxsize=None)
def case2_values(slot: PrimeSlotK, cap: int = DEFAULT_NORM_CAP) -> tuple[tuple[int, ...], ...]:
    """Minimal polynomials over Q of the degenerate traces (F-level)."""
    _check_slot(slot, cap)
    return tuple(sorted(set(degenerate0(slot.ell)) | set(degenerate_inf(slot.ell))))


def case3_values(slot: PrimeSlotK) -> tuple[int, int]:
    n = slot.norm + 1
    return (n, -n)


@dataclass(frozen=True)
class CaseValues:
    slot: PrimeSlotK
    case1: dict = field(default_factory=dict)
    case2: tuple = ()
    case3: tuple = ()


def case_values(slot: PrimeSlotK, cases=(1, 2, 3), cross_check: bool = True,
                cap: int = DEFAULT_NORM_CAP) -> CaseValues:
    return CaseValues(
        slot,
        case1_values(slot, cross_check, cap) if 1 in cases else {},
        case2_values(slot, cap) if 2 in cases else (),
        case3_values(slot) if 3 in cases else (),
    )


# --- polynomial images ---------------------------------------------------------


def image_charpoly(poly, g) -> tuple:
    """Characteristic polynomial of g(y) for y a root of the monic ``poly`` of degree <= 2."""
    poly = [Fraction(c) for c in P.trim(list(poly))]
    if poly[-1] != 1:
        raise ValueError("poly must be monic")
    if len(poly) == 2:
        return (-P.evaluate(g, -poly[0]), Fraction(1))
    if len(poly) != 3:
        raise ValueError("degree 1 or 2 only")
    _, rem = P.divmod_field([Fraction(c) for c in g], poly)
    rem = rem + [Fraction(0)] * (2 - len(rem))
    c0, c1 = rem[0], rem[1]
    tr_y, nm_y = -poly[1], poly[0]
    trace = 2 * c0 + c1 * tr_y
    norm = c0 * c0 + c0 * c1 * tr_y + c1 * c1 * nm_y
    return (norm, -trace, Fraction(1))


def lift_poly(poly, q: int, d: int) -> tuple[int, ...]:
    """Apply a -> lift_trace(a, q, d) to the roots of ``poly``."""
    if d not in (1, 2, 4):
        raise RefusedError(f"relative degree {d} not in (1, 2, 4)")
    out = tuple(Fraction(c) for c in poly)
    while d > 1:
        out = image_charpoly(out, [-2 * q, 0, 1])
        q, d = q * q, d // 2
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError(f"lift of {poly} is not integral")
    return tuple(int(c) for c in out)
