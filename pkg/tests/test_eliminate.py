import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat_hgm.arith import KElt, PrimeSlotK
from fermat_hgm.arith import poly as P
from fermat_hgm.eliminate import (ALWAYS_KEPT, DataFormatError, Eigenvalue, NewformRecord,
                                  case1_values, case2_values, case3_values, cache_path,
                                  eliminate_form, irreducibility_bound, lift_poly, load_newforms,
                                  parse_document, record_to_wire, run_space, slots_over,
                                  verify_result)
from fermat_hgm.hgmsum import RefusedError, lift_trace

from helpers import load_fixture

S11 = PrimeSlotK(11, "split", 4)
DOC = load_fixture("level22_ell11.json")
FORMS = parse_document(DOC)


def test_case_value_sets():
    c1 = case1_values(S11)
    assert sorted(c1) == list(range(2, 11))
    assert all(e.route == "count+gauss" for e in c1.values())
    assert case3_values(S11) == (12, -12)
    c2 = case2_values(S11)
    assert (-316, -4, 1) in c2 and (22, 1) in c2
    assert len(c2) <= 8


def test_case1_matches_tabulated_minpolys():
    tab = load_fixture("table74.json")["rows"]
    c1 = case1_values(S11)
    for t, mp in tab.items():
        got = P.to_str(list(c1[int(t)].minpoly()))
        assert got.replace(" ", "") == mp.replace(" ", "")


def test_refusals():
    with pytest.raises(RefusedError):
        case1_values(PrimeSlotK.over(5))
    with pytest.raises(RefusedError):
        case2_values(PrimeSlotK.over(23), cap=100)


@given(st.integers(-40, 40), st.integers(-40, 40), st.sampled_from([(11, 2), (11, 4), (7, 2), (19, 4)]))
@settings(max_examples=80)
def test_lift_poly_matches_lift_trace(u, v, qd):
    if (u - v) % 2:
        return
    q, d = qd
    a = KElt(u, v)
    mp = a.minpoly()
    got = lift_poly(mp, q, d)
    b = lift_trace(a, q, d)
    want = b.minpoly()
    if len(mp) == 2 or b.is_rational():
        want = P.mul(list(want), list(want)) if len(got) == 3 and len(want) == 2 else want
    assert list(got) == list(want)


def test_fixture_loaded():
    assert len(FORMS) == 14 and not FORMS.diagnostics
    assert FORMS.level == (2, 2)


def test_case1_bound_281():
    rep = run_space((2, 2), FORMS, [S11], cases=(1,))
    assert rep.non_discardable == []
    assert max(rep.primes) == 281
    top = [r.label for r in rep.results if r.bound == 281]
    assert sorted(top) == ["7", "8"]


def test_all_cases():
    rep = run_space((2, 2), FORMS, [S11])
    nd = set(rep.non_discardable)
    assert {"3", "9", "12"} <= nd
    # forms outside K never match a value in K exactly
    for lab in ("7", "8", "10", "11"):
        assert lab not in nd
    for r in rep.results:
        assert verify_result(r)
        if r.surviving is not None:
            assert ALWAYS_KEPT <= r.surviving


def test_witnesses_divide():
    rep = run_space((2, 2), FORMS, [S11], cases=(1,))
    for r in rep.results:
        for p, ws in r.witnesses.items():
            for w in ws:
                assert w.resultant % p == 0
                assert int(P.resultant(list(w.form_poly), list(w.value_poly))) == w.resultant


def test_more_slots_never_grow():
    form = NewformRecord("x", (2, 2), 1)
    s7 = PrimeSlotK.over(7)
    form.eigenvalues[S11] = Eigenvalue(KElt(2, 0))
    form.eigenvalues[s7] = Eigenvalue(KElt(2, 0))
    one = eliminate_form(form, [S11])
    two = eliminate_form(form, [S11, s7])
    if one.surviving is not None and two.surviving is not None:
        assert two.surviving <= one.surviving


def test_conjugate_symmetry():
    for rec in FORMS:
        a = eliminate_form(rec, [S11])
        moved = NewformRecord(rec.label, rec.level, rec.field_degree,
                              {S11.conjugate(): e for e in rec.conjugate().eigenvalues.values()})
        b = eliminate_form(moved, [S11.conjugate()])
        assert a.surviving == b.surviving


def test_missing_and_unitemized():
    form = NewformRecord("n", (2, 2), 4, {S11: Eigenvalue(None, True)})
    r = eliminate_form(form, [S11])
    assert r.discardable and r.non_k_unitemized and r.notes
    r2 = eliminate_form(NewformRecord("m", (2, 2), 1), [S11])
    assert r2.surviving is None and r2.notes
    with pytest.raises(ValueError):
        eliminate_form(form, [])


def test_report_exports():
    rep = run_space((2, 2), FORMS, [S11], cases=(1,))
    lines = rep.to_tsv().strip().split("\n")
    assert lines[0].split("\t")[:2] == ["form_label", "surviving_primes"]
    assert len(lines) == 15
    doc = json.loads(rep.to_json())
    assert doc["primes"] == rep.primes and len(doc["forms"]) == 14
    empty = run_space((2, 2), [], [S11])
    assert empty.results == [] and empty.primes == []


def test_level_mismatch():
    with pytest.raises(ValueError):
        run_space((1, 1), FORMS, [S11])


def test_load_newforms(tmp_path):
    f = tmp_path / "empty.json"
    f.write_text("")
    assert len(load_newforms(f)) == 0
    bad = {"level": [2, 2], "forms": [
        {"label": "w", "eigenvalues": [{"ell": 11, "kind": "split", "root5": 4, "u": 100, "v": 0}]},
        {"label": "m", "eigenvalues": [{"ell": 11, "kind": "split"}]},
        DOC["forms"][1]]}
    g = tmp_path / "bad.json"
    g.write_text(json.dumps(bad))
    got = load_newforms(g)
    assert [r.label for r in got] == ["2"]
    assert len(got.diagnostics) == 2 and "Weil" in got.diagnostics[0]
    h = tmp_path / "junk.json"
    h.write_text("{not json")
    with pytest.raises(DataFormatError):
        load_newforms(h)
    with pytest.raises(DataFormatError):
        parse_document([1, 2])


def test_offline_cache(tmp_path):
    url = "https://example.invalid/forms.json"
    with pytest.raises(DataFormatError):
        load_newforms(url, cache_dir=tmp_path, offline=True)
    p = cache_path(url, tmp_path)
    p.write_text(json.dumps(DOC))
    assert len(load_newforms(url, cache_dir=tmp_path, offline=True)) == 14


def test_wire_roundtrip():
    doc = {"level": [2, 2], "forms": [record_to_wire(r) for r in FORMS]}
    again = parse_document(doc)
    for a, b in zip(FORMS, again):
        assert a.eigenvalues == b.eigenvalues


def test_slots_over():
    slots, skipped = slots_over([3, 5, 7, 11, 29, 31])
    labels = {s.label() for s in slots}
    assert len(slots) == 7 and {"7i", "11s4", "11s7"} <= labels
    assert len(skipped) == 2


def test_bounds():
    assert irreducibility_bound(3).C == 41363281 and irreducibility_bound(3).by_f[1] == 8969
    b5 = irreducibility_bound(5)
    assert b5.C == 335809 and b5.by_f[1] == 809
    b2 = irreducibility_bound(2)
    assert b2.product == 6084 and b2.C == 13 and str(b2) == "6084 -> C(2)=13"
    with pytest.raises(ValueError):
        irreducibility_bound(7)


def test_bound_resultant_oracle():
    # Res(X^c - 1, x^2 - a x + n) = prod over c-th roots of unity z of (z^2 - a z + n),
    # evaluated numerically for a few rational a
    for a, n, c in ((3, 9, 4), (-2, 81, 4), (1, 5, 4), (-8, 4, 1)):
        num = 1
        for k in range(c):
            z = complex(math.cos(2 * math.pi * k / c), math.sin(2 * math.pi * k / c))
            num *= z * z - a * z + n
        exact = P.resultant_xn_minus_one(c, KElt.from_int(a), KElt.from_int(n))
        assert exact.v == 0 and abs(exact.u / 2 - num.real) < 1e-6
