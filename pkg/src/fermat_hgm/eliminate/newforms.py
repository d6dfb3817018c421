"""Hilbert newform eigenvalue records: the JSON wire format, validation, caching."""
from __future__ import annotations

import hashlib
import json
import math
import os
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path

from ..arith import KElt, PrimeSlotK

CACHE_ENV = "FERMAT_HGM_CACHE"


class DataFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Eigenvalue:
    """a_l(F) at one slot.  ``value`` is None for a non-K entry; ``minpoly``
    (monic, low degree first) may then describe it over Q."""

    value: KElt | None
    non_k: bool = False
    minpoly: tuple | None = None

    def poly(self) -> tuple[int, ...] | None:
        if self.value is not None:
            return self.value.minpoly()
        return self.minpoly

    def __str__(self):
        if self.value is not None:
            return str(self.value)
        from ..arith.poly import to_str
        return f"root of {to_str(self.minpoly)}" if self.minpoly else "non-K"


@dataclass
class NewformRecord:
    label: str
    level: tuple[int, int]
    field_degree: int
    eigenvalues: dict = field(default_factory=dict)  # PrimeSlotK -> Eigenvalue
    cm: str | None = None

    def conjugate(self) -> "NewformRecord":
        """Every K-value replaced by its Galois conjugate (slots kept)."""
        ev = {s: Eigenvalue(e.value.conj() if e.value is not None else None, e.non_k, e.minpoly)
              for s, e in self.eigenvalues.items()}
        return NewformRecord(self.label, self.level, self.field_degree, ev, self.cm)


class NewformList(list):
    """Records plus the per-record diagnostics of the load."""

    def __init__(self, records=(), diagnostics=(), level=None, field_name=None):
        super().__init__(records)
        self.diagnostics = list(diagnostics)
        self.level = level
        self.field_name = field_name


def _roots_within(poly, bound_sq: int) -> bool:
    """Real roots of a monic quadratic or linear poly, all of absolute value <= sqrt(bound_sq)."""
    if len(poly) == 2:
        return poly[0] * poly[0] <= bound_sq
    c, b = poly[0], poly[1]
    disc = b * b - 4 * c
    if disc < 0:
        return False
    # largest |root| = (|b| + sqrt(disc)) / 2
    return (abs(b) + math.sqrt(disc)) / 2 <= math.sqrt(bound_sq) + 1e-9


def _parse_eigen(e: dict) -> tuple[PrimeSlotK, Eigenvalue]:
    slot = PrimeSlotK(int(e["ell"]), e["kind"], e.get("root5"))
    if e.get("non_k"):
        mp = e.get("minpoly")
        if mp is not None:
            mp = tuple(int(c) for c in mp)
            if len(mp) not in (2, 3) or mp[-1] != 1:
                raise DataFormatError("minpoly must be monic of degree 1 or 2")
        return slot, Eigenvalue(None, True, mp)
    return slot, Eigenvalue(KElt(int(e["u"]), int(e["v"])))


def parse_record(rec: dict, level) -> NewformRecord:
    label = str(rec["label"])
    out = NewformRecord(label, level, int(rec.get("field_degree", 1)), cm=rec.get("cm"))
    for e in rec.get("eigenvalues", []):
        slot, ev = _parse_eigen(e)
        if ev.value is not None and not ev.value.weil_ok(slot.norm):
            raise DataFormatError(f"{ev.value} at {slot.label()} violates the Weil bound")
        if ev.minpoly is not None and not _roots_within(ev.minpoly, 4 * slot.norm):
            raise DataFormatError(f"minpoly {ev.minpoly} at {slot.label()} violates the Weil bound")
        out.eigenvalues[slot] = ev
    return out


def parse_document(doc) -> NewformList:
    if doc in (None, "", {}):
        return NewformList()
    if not isinstance(doc, dict) or "forms" not in doc:
        raise DataFormatError("top level must be an object with a 'forms' list")
    level = tuple(doc.get("level", (None, None)))
    recs, diags = [], []
    for i, rec in enumerate(doc["forms"]):
        try:
            recs.append(parse_record(rec, level))
        except (KeyError, TypeError, ValueError) as exc:
            label = rec.get("label", f"#{i}") if isinstance(rec, dict) else f"#{i}"
            diags.append(f"record {label}: {type(exc).__name__}: {exc}")
    return NewformList(recs, diags, level, doc.get("field"))


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else Path.home() / ".cache" / "fermat_hgm"


def cache_path(url: str, cache_dir=None) -> Path:
    return Path(cache_dir or default_cache_dir()) / (hashlib.sha256(url.encode()).hexdigest() + ".json")


def _fetch(url: str, cache_dir=None, offline: bool = False) -> str:
    path = cache_path(url, cache_dir)
    if path.exists():
        return path.read_text(encoding="utf-8")
    if offline:
        raise DataFormatError(f"{url} is not cached and offline mode is on")
    with urllib.request.urlopen(url, timeout=60) as resp:
        text = resp.read().decode("utf-8")
    json.loads(text)  # only cache valid JSON
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return text


def load_newforms(source, cache_dir=None, offline: bool = False) -> NewformList:
    """Records from a local file or an http(s) URL in the wire format."""
    src = str(source)
    if src.startswith(("http://", "https://")):
        text = _fetch(src, cache_dir, offline)
    else:
        text = Path(src).read_text(encoding="utf-8")
    if not text.strip():
        return NewformList()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"{src}: {exc}") from None
    return parse_document(doc)


def record_to_wire(rec: NewformRecord) -> dict:
    evs = []
    for s, e in rec.eigenvalues.items():
        d = {"ell": s.ell, "kind": s.kind, "root5": s.root}
        if e.value is not None:
            d.update(u=e.value.u, v=e.value.v, exact=True)
        else:
            d.update(exact=False, non_k=True)
            if e.minpoly:
                d["minpoly"] = list(e.minpoly)
        evs.append(d)
    return {"label": rec.label, "field_degree": rec.field_degree, "cm": rec.cm, "eigenvalues": evs}
