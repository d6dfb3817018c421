"""Command line: ``fermat-hgm <subcommand> ...``.

Exit codes: 0 success, 2 domain refusal, 3 oracle disagreement, 4 data-format error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import ghost as ghost_mod
from .arith import PrimeSlotK, slot_kind
from .arith import poly as P
from .conductor import (ConductorProfile, catalan_cond, cond3_table, cond_q_table, cond_r_table,
                        eps_53, igusa_J, liu_classify, predict_53, reduction_53, trivial_cond)
from .curves import models
from .curves.models import DomainError
from .curves.tate import conductor, tate_algorithm
from .eliminate import (CACHE_ENV, DataFormatError, OracleDisagreement, case1_entry,
                        irreducibility_bound, load_newforms, run_space, slots_over)
from .hgmsum import (P53, P53_SWAPPED, HGMParams, RecognitionError, RefusedError, degenerate0,
                     degenerate_inf, hyp_trace)

EXIT_OK, EXIT_DOMAIN, EXIT_ORACLE, EXIT_DATA = 0, 2, 3, 4


@dataclass
class RunConfig:
    norm_cap: int = 400
    box: dict = field(default_factory=lambda: dict(ghost_mod.DEFAULT_BOX))
    budget: int = ghost_mod.DEFAULT_BUDGET
    cache_dir: str | None = None
    format: str = "tsv"
    jobs: int = 1

    @classmethod
    def load(cls, path: str | None) -> "RunConfig":
        cfg = cls()
        if path:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
            unknown = set(data) - set(asdict(cfg))
            if unknown:
                raise DataFormatError(f"unknown config keys: {sorted(unknown)}")
            for k, v in data.items():
                setattr(cfg, k, v)
        if cfg.cache_dir is None:
            cfg.cache_dir = os.environ.get(CACHE_ENV)
        if cfg.format not in ("tsv", "json"):
            raise DataFormatError("format must be tsv or json")
        return cfg


def _frac(s: str) -> Fraction:
    return Fraction(s)


def _emit(obj, fmt: str):
    if fmt == "json":
        print(json.dumps(obj, indent=1, default=str))
    else:
        for k, v in obj.items():
            print(f"{k}\t{v}")


# --- subcommands ---------------------------------------------------------------


def cmd_trace(args, cfg):
    params = HGMParams.parse(args.params) if args.params else P53_SWAPPED
    ell, t = args.ell, args.t0 % args.ell
    if t in (0, 1):
        raise RefusedError("t0 reduces to 0 or 1 modulo ell; use `degenerate`")
    if ell in (2, 3, 5):
        raise RefusedError(f"ell = {ell} divides 30")
    countable = params in (P53, P53_SWAPPED)
    if args.route in ("count", "both") and not countable:
        raise RefusedError("the point-count route exists only for the (5, 3) parameters")
    slot = PrimeSlotK.over(ell)
    if slot.norm > cfg.norm_cap:
        raise RefusedError(f"slot norm {slot.norm} exceeds the cap {cfg.norm_cap}")
    if args.route == "sum":
        tv = hyp_trace(params, ell, t)
        out = {"route": f"sum ({tv.level}-level, q = {tv.q})", "pair": ", ".join(sorted(map(str, tv.pair))),
               "minpoly": P.to_str(list(tv.minpoly()))}
        return _emit(out, cfg.format)
    # residue order of the exchanged parameters is c53(1/t)
    r = t if params == P53_SWAPPED else pow(t, -1, ell)
    e = case1_entry(slot, r, cross_check=args.route == "both")
    out = {"route": e.route, "pair": ", ".join(map(str, e.pair)), "minpoly": P.to_str(list(e.minpoly()))}
    _emit(out, cfg.format)


def cmd_degenerate(args, cfg):
    if args.ell % 2 == 0 or args.ell % 3 == 0 or args.ell % 5 == 0:
        raise RefusedError(f"ell = {args.ell} divides 30")
    slot_kind(args.ell)
    polys = degenerate0(args.ell) if args.point == "0" else degenerate_inf(args.ell)
    if cfg.format == "json":
        print(json.dumps([P.to_str(list(p)) for p in polys]))
    else:
        for p in polys:
            print(P.to_str(list(p)))


def _profile_dict(prof) -> dict:
    if isinstance(prof, ConductorProfile):
        return {"conductor": str(prof), **{f"why {k}": v for k, v in prof.provenance.items()}}
    return {"conductor": str(prof)}


def cmd_conductor(args, cfg):
    q, r = args.q, args.r
    if args.t0 is not None:
        t0 = _frac(args.t0)
        if t0 == 0:
            prof = trivial_cond(q, r, 0)
        elif (q, r) == (5, 3):
            prof = predict_53(t0)
        else:
            prof = catalan_cond(q, t0)
        return _emit(_profile_dict(prof), cfg.format)
    if args.a is None or args.c is None:
        raise RefusedError("give --a and --c, or --t0")
    a, c = args.a, args.c
    prof = ConductorProfile()
    if (q, r) == (5, 3):
        e3, e5 = eps_53(a, c)
        prof.set("3", e3, "(5,3) case analysis")
        prof.set("sqrt5", e5, "(5,3) case analysis")
    else:
        prof.set(f"p{r}", cond3_table(a, c, q) if r == 3 else cond_r_table(a, c, q, r), "table at r")
        prof.set(f"p{q}", cond_q_table(a, c, q, r), "table at q")
    _emit(_profile_dict(prof), cfg.format)


def cmd_ghost(args, cfg):
    box = dict(cfg.box)
    if args.box:
        A, C, E = (int(x) for x in args.box.split(","))
        box = {"A": A, "C": C, "E": E}
    sols = ghost_mod.search(args.q, args.r, box, allow_two=args.allow_two, budget=cfg.budget)
    if cfg.format == "json":
        rows = []
        for g in sols:
            cl = ghost_mod.classify(g)
            rows.append({"t0": str(g.t0), "tuple": list(g.tuple8()), "sign": g.sign,
                         "conductor": str(cl)})
        print(json.dumps(rows, indent=1))
    else:
        sys.stdout.write(ghost_mod.to_tsv(sols))


def cmd_bound(args, cfg):
    b = irreducibility_bound(args.ell)
    if cfg.format == "json":
        print(json.dumps({"ell": b.ell, "C": b.C, "by_f": b.by_f,
                          "factored": {str(p): e for p, e in b.factored.items()}}))
    elif b.ell == 2:
        print(f"{b.product} → C(2)={b.C}")
    else:
        print(f"C({b.ell})={b.C}")


def cmd_eliminate(args, cfg):
    recs = load_newforms(args.data, cache_dir=cfg.cache_dir, offline=args.offline)
    for d in recs.diagnostics:
        print(f"warning: {d}", file=sys.stderr)
    primes = [int(x) for x in args.primes.split(",")]
    slots, skipped = slots_over(primes, cfg.norm_cap)
    have = {s for r in recs for s in r.eigenvalues}
    if args.only_data_slots:
        slots = [s for s in slots if s in have]
    for s in skipped:
        print(f"note: slot {s.label()} skipped (norm {s.norm})", file=sys.stderr)
    if not slots:
        raise RefusedError("no usable slots")
    cases = tuple(int(c) for c in args.cases.split(","))
    rep = run_space(tuple(args.level), recs, slots, cases)
    if args.out:
        Path(args.out + ".tsv").write_text(rep.to_tsv(), encoding="utf-8")
        Path(args.out + ".json").write_text(rep.to_json(), encoding="utf-8")
    bounds = [r.bound for r in rep.results if r.surviving is not None]
    summary = {
        "non_discardable": ",".join(rep.non_discardable) or "-",
        "primes": ",".join(map(str, rep.primes)) or "-",
        "bound": max(bounds) if bounds else "-",
    }
    if rep.unitemized:
        summary["discardable, primes not itemized"] = ",".join(rep.unitemized)
    if cfg.format == "json":
        print(rep.to_json())
    else:
        _emit(summary, "tsv")


CURVES = {
    "frey_ppp": models.frey_ppp, "e2": models.e2, "e3_plus": models.e3_plus,
    "e3_minus": models.e3_minus, "e_t": models.e_t_remark25,
}


def cmd_tate(args, cfg):
    if args.curve not in CURVES:
        raise RefusedError(f"unknown curve {args.curve!r}; choose from {sorted(CURVES)}")
    E = CURVES[args.curve](_frac(args.t))
    if args.p:
        ld = tate_algorithm(E, args.p)
        out = {"p": ld.p, "kodaira": ld.kodaira, "f_p": ld.f_p, "v_disc": ld.v_delta,
               "reduction": ld.reduction}
    else:
        N, local = conductor(E)
        out = {"conductor": N, **{f"p={p}": f"{d.kodaira} f={d.f_p}" for p, d in local.items()}}
    _emit(out, cfg.format)


def cmd_igusa(args, cfg):
    t = _frac(args.t)
    J = igusa_J(models.c53(t))
    out = {f"J{2 * i + 2}": str(v) for i, v in enumerate(J.as_tuple())}
    for ell in (3, 5):
        out[f"liu {ell}"] = liu_classify(J, ell).kind
    try:
        red = reduction_53(t)
        out["guard v3(17t+108)"] = red.guard_v3
    except DomainError:
        pass
    _emit(out, cfg.format)


# --- driver --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fermat-hgm", description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="JSON file with RunConfig fields")
    ap.add_argument("--format", choices=("tsv", "json"))
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("trace", help="Case-1 trace at a residue")
    p.add_argument("--params", help="a,b,c,d (default: the exchanged (5,3) set)")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t0", type=int, required=True)
    p.add_argument("--route", choices=("count", "sum", "both"), default="both")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("degenerate", help="degenerate trace values at 0 or infinity")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--point", choices=("0", "inf"), default="0")
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("conductor", help="conductor exponents")
    p.add_argument("--a", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--t0")
    p.add_argument("--q", type=int, default=5)
    p.add_argument("--r", type=int, default=3)
    p.set_defaults(func=cmd_conductor)

    p = sub.add_parser("ghost", help="ghost-solution search")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--box", help="A,C,E")
    p.add_argument("--allow-two", action="store_true")
    p.set_defaults(func=cmd_ghost)

    p = sub.add_parser("bound", help="irreducibility bound C(ell)")
    p.add_argument("--ell", type=int, required=True, choices=(2, 3, 5))
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("eliminate", help="discard newforms of a level")
    p.add_argument("--level", type=int, nargs=2, required=True)
    p.add_argument("--data", required=True, help="JSON file or URL")
    p.add_argument("--primes", required=True, help="comma list of rational primes")
    p.add_argument("--cases", default="1,2,3")
    p.add_argument("--out", help="path prefix for the .tsv/.json report")
    p.add_argument("--offline", action="store_true")
    p.add_argument("--only-data-slots", action="store_true",
                   help="use only slots present in the data")
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("tate", help="Tate's algorithm on a named family")
    p.add_argument("--curve", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_tate)

    p = sub.add_parser("igusa", help="Igusa invariants and reduction type of c53(t)")
    p.add_argument("--t", required=True)
    p.set_defaults(func=cmd_igusa)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    module = args.func.__name__.removeprefix("cmd_")
    try:
        cfg = RunConfig.load(args.config)
        if args.format:
            cfg.format = args.format
        args.func(args, cfg)
    except (OracleDisagreement, RecognitionError) as e:
        print(f"{module}: oracle disagreement: {e}", file=sys.stderr)
        return EXIT_ORACLE
    except (DataFormatError, json.JSONDecodeError, FileNotFoundError) as e:
        print(f"{module}: data error: {e}", file=sys.stderr)
        return EXIT_DATA
    except (RefusedError, DomainError, ghost_mod.BudgetError, ValueError, ArithmeticError) as e:
        print(f"{module}: refused: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
