"""Acceptance criteria 1-11, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.  Criterion 10 needs the optional full
eigenvalue dataset: set FERMAT_HGM_FULL_DATA to a directory holding
level_2_2.json, level_2_3.json, level_3_2.json and level_3_3.json.
"""
import math
import os
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from fermat_hgm.arith import KElt, PrimeSlotK, is_prime, min_poly_over_Q, multiplicative_order
from fermat_hgm.arith import poly as P
from fermat_hgm.arith.kfield import slots_up_to
from fermat_hgm.conductor import (d_of_poly, d_valuation, eps_53, igusa_J, liu_classify,
                                  liu_quantities, table31)
from fermat_hgm.curves import (congruence_check, conductor, e2, e3_minus, e3_plus, elliptic_charpoly,
                               euler_factor, euler_sextic_c5, frey_ppp, split_over_K, tate_algorithm)
from fermat_hgm.curves.models import F_integral, c53
from fermat_hgm.eliminate import (case1_entry, irreducibility_bound, load_newforms, parse_document,
                                  run_space, slots_over)
from fermat_hgm.ghost import search
from fermat_hgm.hgmsum import (P53_SWAPPED, degenerate0, degenerate0_values, degenerate_inf_values,
                               hyp_trace, lift_trace)

from helpers import load_fixture

RESULTS: dict = {}
FULL_DATA_ENV = "FERMAT_HGM_FULL_DATA"


def record(n: int, desc: str):
    """Decorator: run the check, time it, store one PASS/FAIL line."""
    def wrap(fn):
        def run(*a, **k):
            t = time.perf_counter()
            try:
                detail = fn(*a, **k) or ""
            except pytest.skip.Exception as e:
                RESULTS[n] = f"criterion {n:2d}: SKIP  {desc} ({e})"
                raise
            except BaseException as e:
                RESULTS[n] = f"criterion {n:2d}: FAIL  {desc} ({type(e).__name__}: {e})"
                raise
            dt = time.perf_counter() - t
            RESULTS[n] = f"criterion {n:2d}: PASS  {desc} [{dt:.1f} s] {detail}".rstrip()
        run.__name__ = fn.__name__
        return run
    return wrap


def _within(limit, t0):
    dt = time.perf_counter() - t0
    assert dt < limit, f"took {dt:.1f} s, limit {limit} s"


# 1 ----------------------------------------------------------------------------

@record(1, "Case-1 traces at ell = 11 by point counts and by Gauss sums")
def test_criterion_01_case1_table():
    t0 = time.perf_counter()
    rows = load_fixture("table74.json")["rows"]
    slot = PrimeSlotK(11, "split", 4)
    for t, want in rows.items():
        count = split_over_K(euler_factor(c53(Fraction(1, int(t))), slot.norm))
        poly_count = P.to_str(list(P.squarefree_part(list(_pair_poly(count)))))
        tv = hyp_trace(P53_SWAPPED, 11, int(t))
        assert poly_count == want, (t, poly_count, want)
        assert P.to_str(list(tv.minpoly())) == want, (t, tv.minpoly(), want)
        assert tv.pair == frozenset(count)
    assert rows["2"] == "x + 5" and rows["9"] == "x^2 + 3*x + 1"
    _within(5, t0)
    return f"{len(rows)} residues"


def _pair_poly(pair):
    a, b = pair
    s, p = a + b, a * b
    return [Fraction(p.u, 2), -Fraction(s.u, 2), 1]


# 2 ----------------------------------------------------------------------------

@record(2, "Euler factors at norms 49, 11, 29 and the mod 3 / mod sqrt5 congruences")
def test_criterion_02_euler_factors():
    t0 = time.perf_counter()
    fx = load_fixture("table71.json")
    c5 = euler_sextic_c5(Fraction(1, 3))
    slots = []
    for row in fx["slots"]:
        s = PrimeSlotK(row["ell"], row["kind"], row["root5"])
        slots.append(s)
        assert str(euler_factor(c53(3), s.norm)) == row["c53"]
        assert str(euler_factor(c5, s.norm)) == row["darmon"]
        assert P.to_str(elliptic_charpoly(e3_plus(3), s.norm)) == row["e3"]
    assert [P.to_str(elliptic_charpoly(e3_plus(3), s.norm)) for s in slots] == \
        ["x^2 + 10*x + 49", "x^2 - 3*x + 11", "x^2 + 6*x + 29"]
    assert all(c.status == "pass" for c in congruence_check(c53(3), c5, 3, slots))
    assert all(c.status == "pass" for c in congruence_check(c53(3), e3_plus(3), "sqrt5", slots))
    _within(10, t0)


# 3 ----------------------------------------------------------------------------

@record(3, "split of (11, 4, 6), lift of 2+2sqrt5, Degenerate0(11)")
def test_criterion_03_degenerate_example():
    from fermat_hgm.curves import LPoly2
    t0 = time.perf_counter()
    fx = load_fixture("example_degenerate11.json")
    a, b = split_over_K(LPoly2(11, 4, 6))
    assert {a, b} == {KElt(4, 4), KElt(4, -4)}
    assert P.to_str(list(lift_trace(KElt(4, 4), 11, 2).minpoly())) == "x^2 - 4*x - 316"
    assert {P.to_str(list(p)) for p in degenerate0(11)} == set(fx["degenerate0"])
    assert len(fx["degenerate0"]) == 5
    _within(5, t0)


# 4 ----------------------------------------------------------------------------

@record(4, "point-count and Gauss-sum routes agree on every slot of norm <= 200")
def test_criterion_04_oracle_sweep():
    t0 = time.perf_counter()
    both = count_only = 0
    for slot in slots_up_to(200):
        for t in range(2, slot.ell):
            e = case1_entry(slot, t, cross_check=True)  # raises on any disagreement
            if e.route == "count+gauss":
                both += 1
            else:
                count_only += 1
            for v in e.pair:
                assert v.weil_ok(slot.norm)
    assert both > 3000
    _within(600, t0)
    return f"{both} entries compared, {count_only} beyond the Gauss-sum budget"


# 5 ----------------------------------------------------------------------------

@record(5, "Igusa J2..J10 of c53(t), conditions (I) and (V), Liu regimes")
def test_criterion_05_igusa():
    t0 = time.perf_counter()
    fx = load_fixture("prop74.json")
    lin = fx["linear_factors"]

    def rf(entry, t):
        v = Fraction(entry["const"])
        for name, e in entry["factors"]:
            v *= P.evaluate([Fraction(c) for c in lin[name]], t) ** e
        return v

    ts = [Fraction(n, d) for n, d in ((2, 1), (3, 1), (-1, 1), (7, 3), (5, 7), (-11, 4), (13, 9),
                                      (17, 2), (-4, 5), (9, 16), (101, 3))]
    for t in ts:
        J = igusa_J(c53(t))
        for name in ("J2", "J4", "J6", "J8", "J10"):
            assert getattr(J, name) == P.evaluate([Fraction(c) for c in fx["J"][name]], t)
        I3, V3 = liu_quantities(J, 3)
        _, V5 = liu_quantities(J, 5)
        assert I3 == tuple(rf(e, t) for e in fx["I"])
        assert V3 == tuple(rf(e, t) for e in fx["V3"])
        assert V5 == tuple(rf(e, t) for e in fx["V5"])
    # degree <= 10 identities are fixed by 11 points; spot-check the leading term too
    assert igusa_J(c53(2)).J2 == -1200 * 4
    for ell in (3, 5):
        assert liu_classify(igusa_J(c53(1 + Fraction(ell) ** 5)), ell).kind == "potentially-multiplicative"
        assert liu_classify(igusa_J(c53(Fraction(2))), ell).potentially_good
    assert liu_classify(igusa_J(c53(Fraction(7, 3))), 5).potentially_good
    _within(5, t0)


# 6 ----------------------------------------------------------------------------

@record(6, "Tate's algorithm: Fermat ghosts, e2 at 1/9 and 8/9, one sample per table row at 3")
def test_criterion_06_tate():
    t0 = time.perf_counter()
    assert [conductor(frey_ppp(Fraction(t)))[0] for t in (-1, 2, Fraction(1, 2))] == [32, 32, 64]
    assert tate_algorithm(e2(Fraction(1, 9)), 2).f_p == 6
    assert tate_algorithm(e2(Fraction(8, 9)), 2).f_p == 5
    # one t0 per row: v(t0) > 3, v(t0 - 1) > 3, t0 = 5 mod 9, t0 = 2 mod 9, 3^-3k scaled rows
    samples = [Fraction(2 * 3 ** 5), 1 + Fraction(3) ** 5, Fraction(5), Fraction(2),
               Fraction(2, 27), Fraction(4, 27)]
    kinds = set()
    for t in samples:
        ep, em, hint = table31(t)
        kinds.add(hint)
        assert tate_algorithm(e3_plus(t), 3).f_p == ep, t
        assert tate_algorithm(e3_minus(t), 3).f_p == em, t
    assert len(kinds) == len(samples)
    _within(5, t0)


# 7 ----------------------------------------------------------------------------

GHOSTS = {
    (5, 3): {"-32/343", "9/8", "-1/8", "25/24", "-1/24", "32/5", "3/8", "32/27", "5/8", "1024/1029"},
    (7, 5): {"7/32", "25/32"},
    (11, 3): {"-3/8", "-1/8", "9/8", "11/8"},
    (13, 3): {"-1/8", "9/8"},
    (13, 5): set(), (13, 7): set(), (13, 11): set(),
}


@record(7, "ghost search in the default box")
def test_criterion_07_ghosts():
    t0 = time.perf_counter()
    for (q, r), want in GHOSTS.items():
        got = {g.t0 for g in search(q, r)}
        assert got == {Fraction(x) for x in want}, (q, r, sorted(got))
    _within(120, t0)


# 8 ----------------------------------------------------------------------------

@record(8, "irreducibility bounds C(2), C(3), C(5)")
def test_criterion_08_bounds():
    t0 = time.perf_counter()
    b2, b3, b5 = (irreducibility_bound(x) for x in (2, 3, 5))
    assert (b2.C, b2.product) == (13, 6084)
    assert b3.C == 41363281 and b5.C == 335809
    _within(120, t0)


# 9 ----------------------------------------------------------------------------

@record(9, "level (2,2) fixture at the norm-11 slot")
def test_criterion_09_elimination_fixture():
    t0 = time.perf_counter()
    forms = parse_document(load_fixture("level22_ell11.json"))
    slot = [PrimeSlotK(11, "split", 4)]
    case1 = run_space((2, 2), forms, slot, cases=(1,))
    disc = [r for r in case1.results if r.discardable]
    assert all(max(r.surviving) <= 281 for r in disc)
    assert any(281 in r.surviving for r in disc)
    full = run_space((2, 2), forms, slot)
    assert {"3", "9", "12"} <= set(full.non_discardable)
    _within(10, t0)
    return f"non-discardable with all cases: {sorted(full.non_discardable, key=int)}"


# 10 ---------------------------------------------------------------------------

PRIMES_37 = [7, 11, 13, 17, 19, 29, 31, 41, 59, 61, 71, 79, 89, 101, 109, 131, 139, 149, 151, 179,
             181, 191, 199, 211, 229, 239, 241, 251, 269, 271, 281, 311, 331, 349, 359, 379, 389]
PUBLISHED_SETS = {
    (2, 2): ({"3", "9", "12"}, {2, 3, 5, 11, 19, 29}),
    (2, 3): ({"1", "7", "11", "12", "13", "16", "21"}, {2, 3, 5, 7, 11, 13, 19, 29, 31}),
    (3, 2): ({"64", "65", "69", "73", "77", "78", "79"}, {2, 3, 5, 7, 11, 19, 29, 41, 61}),
    (3, 3): ({"22", "39"}, {2, 3, 5, 7, 11, 13, 19, 29, 31, 41, 61, 71, 79, 89, 101, 109}),
}


@record(10, "full eigenvalue data on all four levels")
def test_criterion_10_full_data():
    root = os.environ.get(FULL_DATA_ENV)
    if not root or not Path(root).is_dir():
        pytest.skip(f"optional dataset not present (set {FULL_DATA_ENV})")
    t0 = time.perf_counter()
    assert len(PRIMES_37) == 37
    slots, _ = slots_over(PRIMES_37)
    extras = {}
    for (i, j), (nd, primes) in PUBLISHED_SETS.items():
        forms = load_newforms(Path(root) / f"level_{i}_{j}.json", offline=True)
        rep = run_space((i, j), forms, slots)
        assert set(rep.non_discardable) == nd, ((i, j), rep.non_discardable)
        assert primes <= set(rep.primes)
        extras[(i, j)] = sorted(set(rep.primes) - primes)
    _within(3600, t0)
    return f"extra primes {extras}"


# 11 ---------------------------------------------------------------------------

@record(11, "property suites: Weil, functional equation, d-test, eps5, degenerate sizes, integrality")
def test_criterion_11_properties():
    rng = random.Random(11)
    # Weil bounds and functional equation on every computed trace / L-polynomial
    n_lp = 0
    for slot in slots_up_to(200):
        for t in range(2, slot.ell):
            lp = euler_factor(c53(Fraction(1, t)), slot.norm)
            cp = lp.charpoly()
            q = slot.norm
            assert all(cp[k] == q ** (2 - k) * cp[4 - k] for k in range(3))
            roots = np.roots(cp[::-1])
            assert np.allclose(np.abs(roots), math.sqrt(q), rtol=1e-7)
            assert all(np.min(np.abs(roots - q / z)) < 1e-6 * q for z in roots)
            a, b = split_over_K(lp)
            assert a.weil_ok(q) and b.weil_ok(q)
            n_lp += 1
    # v_r(d) >= 1 over 500 random coprime pairs per r
    for r in (3, 5, 7, 11, 13):
        seen = 0
        while seen < 500:
            a, c = rng.randint(-10 ** 4, 10 ** 4), rng.randint(-10 ** 4, 10 ** 4)
            q = rng.choice([p for p in (3, 5, 7, 11, 13, 17) if p != r])
            if a * c == 0 or math.gcd(a, c) != 1 or a % r == 0 or (a ** q + c ** r) % r == 0:
                continue
            seen += 1
            d = d_of_poly(F_integral(q, r, a, c), r)
            assert d != 0 and Fraction(d).denominator % r and (Fraction(d).numerator % r == 0)
    # eps5 against the d-test over every residue class mod 25, with one lift each
    n_eps = 0
    for a0 in range(25):
        for c0 in range(25):
            for a, c in ((a0, c0), (a0 + 25, c0 + 50)):
                if a == 0 or c == 0 or math.gcd(a, c) != 1 or c % 5 == 0 or (a ** 5 + c ** 3) % 5 == 0:
                    continue
                assert eps_53(a, c)[1] == (2 if d_valuation(c, a, 3, 5) >= 2 else 3), (a, c)
                n_eps += 1
    # degenerate set sizes and min poly integrality for every ell <= 400
    n_deg = 0
    for ell in range(7, 401):
        if not is_prime(ell):
            continue
        f = multiplicative_order(ell, 15)
        for vals, bound in ((degenerate0_values(ell), 5), (degenerate_inf_values(ell), 3)):
            polys = {min_poly_over_Q(v) for v in vals.values()}  # raises if not integral
            assert len(polys) <= bound, (ell, polys)
            for v in set(vals.values()):
                assert all(abs(v.embed(k)) <= 2 * ell ** (f / 2) + 1e-6
                           for k in range(1, 15) if math.gcd(k, 15) == 1)
        n_deg += 1
    return f"{n_lp} L-polynomials, {n_eps} eps5 pairs, {n_deg} primes for the degenerate sets"


def summary_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except pytest.skip.Exception:
                pass
            except Exception:  # the line is already recorded
                pass
    print("\n".join(summary_lines()))
