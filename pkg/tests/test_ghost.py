from fractions import Fraction

import pytest

from fermat_hgm.conductor import ConductorProfile
from fermat_hgm.ghost import (TSV_COLUMNS, BudgetError, GhostSolution, Unclassified, classify,
                              example_catalog, fermat_ghost_conductors, ghost_fixture, search,
                              to_tsv)

FIX = ghost_fixture()["signatures"]
SIGS = [tuple(map(int, k.split(","))) for k in FIX]


@pytest.fixture(scope="module")
def found():
    return {sig: search(*sig) for sig in SIGS}


@pytest.mark.parametrize("sig", SIGS, ids=lambda s: f"{s[0]}_{s[1]}")
def test_search_matches_fixture(found, sig):
    got = {g.t0 for g in found[sig]}
    want = {Fraction(r["t0"]) for r in FIX[f"{sig[0]},{sig[1]}"]["rows"]}
    assert got == want


def test_solutions_are_valid(found):
    for sols in found.values():
        for g in sols:
            assert g.holds() and g.normalized()


def test_catalan_rows_classified(found):
    for (q, r), sols in found.items():
        rows = {Fraction(x["t0"]): x for x in FIX[f"{q},{r}"]["rows"]}
        for g in sols:
            cl = classify(g)
            if g.t0 not in (Fraction(-1, 8), Fraction(9, 8)) or r != 3:
                continue
            assert isinstance(cl, ConductorProfile)
            row = rows[g.t0]
            if (q, r) == (5, 3):
                assert str(cl) == row["conductor"]
            else:
                assert cl.exponents[f"p{q}"] == row["vq"]
                assert cl.exponents["3"] == row["vr"]


def test_unclassified_rows_carry_reasons(found):
    kinds = set()
    for sols in found.values():
        for g in sols:
            cl = classify(g)
            if isinstance(cl, Unclassified):
                assert cl.reason
                kinds.add(cl.reason.split(" ")[0])
    assert kinds


def test_small_b_exponent_left_unclassified():
    g = next(g for g in search(5, 3) if g.t0 == Fraction(-32, 343))
    cl = classify(g)
    assert isinstance(cl, Unclassified) and cl.reported == "3^4 * sqrt5^2"


def test_box_monotone():
    small = {g.t0 for g in search(7, 3, box={"A": 10, "C": 10, "E": 6})}
    big = {g.t0 for g in search(7, 3, box={"A": 40, "C": 40, "E": 8})}
    assert small <= big


def test_budget():
    with pytest.raises(BudgetError):
        search(5, 3, box={"A": 10 ** 4, "C": 10 ** 4, "E": 30})
    with pytest.raises(ValueError):
        search(3, 5)


def test_example_catalog():
    cat = example_catalog(7)
    assert {g.t0 for g in cat} == {Fraction(-1, 8), Fraction(9, 8), Fraction(1, 9), Fraction(8, 9)}
    assert all(g.holds() for g in cat)


def test_allow_two_finds_more():
    base = {g.t0 for g in search(5, 3, box={"A": 10, "C": 10, "E": 4})}
    wide = search(5, 3, box={"A": 10, "C": 10, "E": 4}, allow_two=True)
    assert base <= {g.t0 for g in wide}
    assert any(g.w for g in wide)


def test_fermat_ghosts():
    assert fermat_ghost_conductors() == {Fraction(-1): 32, Fraction(2): 32, Fraction(1, 2): 64}


def test_tsv():
    text = to_tsv(search(5, 3))
    lines = text.strip().split("\n")
    assert lines[0].split("\t") == TSV_COLUMNS
    assert len(lines) == 1 + len(FIX["5,3"]["rows"])
    assert all(len(x.split("\t")) == len(TSV_COLUMNS) for x in lines)


def test_terms_example():
    g = GhostSolution(5, 3, -1, -2, 0, 0, 0, 2, 0, 0, 1)
    assert g.terms() == (-1, 9, -8) and g.t0 == Fraction(-1, 8)
