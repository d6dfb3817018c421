"""Discarding newforms: the primes p for which a form can still be congruent
to the motive of a solution, slot by slot."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from ..arith import PrimeSlotK
from ..arith import poly as P
from ..arith.padic import factorize
from .cases import (DEFAULT_NORM_CAP, case1_values, case2_values, case3_values, lift_poly)
from .newforms import NewformRecord

ALWAYS_KEPT = frozenset({2, 3, 5})


@dataclass(frozen=True)
class Witness:
    slot: str
    case: int
    key: str  # which case value, e.g. "t=2", "x^2 - 4x - 316", "+12"
    form_poly: tuple  # after lifting for Case 2
    value_poly: tuple
    resultant: int

    @property
    def perfect(self) -> bool:
        return self.resultant == 0

    def verify(self, p: int | None = None) -> bool:
        """Recompute the resultant; with p, also check p divides it."""
        r = int(P.resultant(list(self.form_poly), list(self.value_poly)))
        if r != self.resultant:
            return False
        return True if p is None else r % p == 0

    def as_dict(self) -> dict:
        return {"slot": self.slot, "case": self.case, "value": self.key,
                "form_poly": list(self.form_poly), "value_poly": list(self.value_poly),
                "resultant": str(self.resultant)}


@dataclass
class SlotOutcome:
    slot: str
    survivors: frozenset | None  # None: every prime (a perfect match)
    witnesses: dict = field(default_factory=dict)  # p -> Witness
    perfect: list = field(default_factory=list)  # Witnesses with resultant 0


@dataclass
class FormResult:
    label: str
    surviving: frozenset | None  # None: all primes
    witnesses: dict = field(default_factory=dict)  # p -> [Witness, one per used slot]
    perfect_slots: dict = field(default_factory=dict)  # slot -> [Witness]
    notes: list = field(default_factory=list)
    non_k_unitemized: bool = False
    cm: str | None = None

    @property
    def discardable(self) -> bool:
        return self.surviving is not None or self.non_k_unitemized

    @property
    def bound(self) -> int | None:
        return max(self.surviving) if self.surviving else None

    def perfect_cases(self) -> set:
        """Cases that give a perfect match at every used slot."""
        if not self.perfect_slots:
            return set()
        sets = [{w.case for w in ws} for ws in self.perfect_slots.values()]
        return set.intersection(*sets)

    @property
    def cm_consistent(self) -> bool:
        return self.surviving is None and 2 in self.perfect_cases()


def _value_list(slot: PrimeSlotK, cases, cross_check: bool, cap: int):
    """(case, key, value poly, needs F-level lift) for every case value at the slot."""
    out = []
    if 1 in cases:
        for t, e in case1_values(slot, cross_check, cap).items():
            out.append((1, f"t={t}", e.poly(), False))
    if 2 in cases:
        for mp in case2_values(slot, cap):
            out.append((2, P.to_str(list(mp)), mp, True))
    if 3 in cases:
        for v in case3_values(slot):
            out.append((3, f"{v:+d}", (-v, 1), False))
    return out


def slot_outcome(ev_poly, slot: PrimeSlotK, cases=(1, 2, 3), cross_check: bool = True,
                 cap: int = DEFAULT_NORM_CAP) -> SlotOutcome:
    """Primes dividing a_l(F) - v for some case value v, over both conjugates."""
    lifted = None
    surv: set = set()
    out = SlotOutcome(slot.label(), frozenset())
    for case, key, vpoly, needs_lift in _value_list(slot, cases, cross_check, cap):
        fpoly = ev_poly
        if needs_lift:
            if lifted is None:
                lifted = lift_poly(ev_poly, slot.norm, slot.rel_deg_F)
            fpoly = lifted
        r = int(P.resultant(list(fpoly), list(vpoly)))
        w = Witness(slot.label(), case, key, tuple(fpoly), tuple(vpoly), r)
        if r == 0:
            out.perfect.append(w)
            continue
        for p in factorize(r):
            if p not in surv:
                surv.add(p)
                out.witnesses[p] = w
    out.survivors = None if out.perfect else frozenset(surv)
    return out


def eliminate_form(form: NewformRecord, slots, cases=(1, 2, 3), cross_check: bool = True,
                   cap: int = DEFAULT_NORM_CAP) -> FormResult:
    slots = list(slots)
    if not slots:
        raise ValueError("no slots given")
    res = FormResult(form.label, None, cm=form.cm)
    current = None  # None = all primes
    per_slot: list[SlotOutcome] = []
    for slot in slots:
        ev = form.eigenvalues.get(slot)
        if ev is None:
            res.notes.append(f"no eigenvalue at {slot.label()}; slot gives no constraint")
            continue
        poly = ev.poly()
        if poly is None:
            res.non_k_unitemized = True
            res.notes.append(f"non-K eigenvalue at {slot.label()} without a minimal polynomial: "
                             "discardable for all but finitely many p, primes not itemized")
            continue
        so = slot_outcome(poly, slot, cases, cross_check, cap)
        per_slot.append(so)
        if so.survivors is None:
            res.perfect_slots[so.slot] = so.perfect
            continue
        current = so.survivors if current is None else current & so.survivors
    if current is not None:
        current = frozenset(current) | ALWAYS_KEPT
        for p in sorted(current):
            if p in ALWAYS_KEPT:
                continue
            res.witnesses[p] = [so.witnesses[p] if so.survivors is not None else so.perfect[0]
                                for so in per_slot]
    res.surviving = current
    return res


def verify_result(res: FormResult) -> bool:
    """Replay every witness."""
    for p, ws in res.witnesses.items():
        for w in ws:
            if not (w.verify() if w.perfect else w.verify(p)):
                return False
    for ws in res.perfect_slots.values():
        if not all(w.verify() and w.perfect for w in ws):
            return False
    return True


@dataclass
class EliminationReport:
    level: tuple
    slots: list
    results: list = field(default_factory=list)

    @property
    def non_discardable(self) -> list[str]:
        return [r.label for r in self.results if not r.discardable]

    @property
    def primes(self) -> list[int]:
        """The union of surviving sets of the discardable forms."""
        out = set()
        for r in self.results:
            if r.surviving is not None:
                out |= r.surviving
        return sorted(out)

    @property
    def unitemized(self) -> list[str]:
        return [r.label for r in self.results if r.surviving is None and r.non_k_unitemized]

    def to_tsv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(["form_label", "surviving_primes", "witness_slot", "witness_case", "witness_value"])
        for r in self.results:
            if r.surviving is None:
                ws = [x for v in r.perfect_slots.values() for x in v[:1]]
                sp = "ALL" if not r.non_k_unitemized else "FINITE"
            else:
                sp = ",".join(map(str, sorted(r.surviving)))
                ws = [ws[0] for ws in r.witnesses.values() if ws]
            w.writerow([r.label, sp, ";".join(x.slot for x in ws), ";".join(str(x.case) for x in ws),
                        ";".join(x.key for x in ws)])
        return buf.getvalue()

    def to_json(self) -> str:
        forms = []
        for r in self.results:
            forms.append({
                "label": r.label,
                "surviving": None if r.surviving is None else sorted(r.surviving),
                "discardable": r.discardable,
                "bound": r.bound,
                "cm": r.cm,
                "cm_consistent": r.cm_consistent,
                "witnesses": {str(p): [w.as_dict() for w in ws] for p, ws in r.witnesses.items()},
                "perfect_matches": {s: [w.as_dict() for w in ws] for s, ws in r.perfect_slots.items()},
                "notes": r.notes,
            })
        doc = {"level": list(self.level) if self.level else None,
               "slots": [s.label() for s in self.slots],
               "non_discardable": self.non_discardable, "primes": self.primes,
               "unitemized": self.unitemized, "forms": forms}
        return json.dumps(doc, indent=1, sort_keys=False)


def run_space(level, records, slots, cases=(1, 2, 3), cross_check: bool = True,
              cap: int = DEFAULT_NORM_CAP) -> EliminationReport:
    slots = list(slots)
    level = tuple(level) if level is not None else None
    rep = EliminationReport(level, slots)
    for rec in records:
        if level is not None and rec.level and tuple(rec.level) != level:
            raise ValueError(f"record {rec.label} has level {rec.level}, expected {level}")
        rep.results.append(eliminate_form(rec, slots, cases, cross_check, cap))
    return rep


def slots_over(primes, cap: int = DEFAULT_NORM_CAP) -> tuple[list, list]:
    """Every slot above the given rational primes with norm <= cap, and the skipped ones."""
    out, skipped = [], []
    for ell in primes:
        s = PrimeSlotK.over(ell)
        cands = [s, s.conjugate()] if s.kind == "split" else [s]
        for c in cands:
            (out if c.norm <= cap and ell not in (2, 3, 5) else skipped).append(c)
    return out, skipped
