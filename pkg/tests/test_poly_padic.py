import math
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from fermat_hgm.arith import KElt, is_prime
from fermat_hgm.arith import poly as P
from fermat_hgm.arith.padic import factorize, integer_root, valuation

small = st.integers(-30, 30)
polys = st.lists(small, min_size=1, max_size=5).map(lambda c: c + [1])


def _res_by_roots(a, b):
    # Res(x - a, x - b) products for linear factors: prod (a_i - b_j)
    return math.prod(x - y for x in a for y in b)


@given(st.lists(small, min_size=1, max_size=3), st.lists(small, min_size=1, max_size=3))
def test_resultant_from_roots(ra, rb):
    pa, pb = [1], [1]
    for r in ra:
        pa = P.mul(pa, [-r, 1])
    for r in rb:
        pb = P.mul(pb, [-r, 1])
    assert P.resultant(pa, pb) == _res_by_roots(ra, rb)


@given(polys, polys)
def test_divmod_and_gcd(a, b):
    qt, r = P.divmod_field(a, b)
    assert P.trim(P.add(P.mul(qt, b), r)) == P.trim([Fraction(c) for c in a])
    g = P.gcd(a, b)
    assert not P.divmod_field(a, g)[1] and not P.divmod_field(b, g)[1]


@given(polys)
def test_str_round_trip(a):
    assert P.from_str(P.to_str(a)) == P.trim(a)


@given(st.integers(1, 12), st.integers(-20, 20), st.integers(-20, 20))
def test_resultant_xn_minus_one(n, s, p):
    direct = P.resultant([-1] + [0] * (n - 1) + [1], [p, -s, 1])
    assert P.resultant_xn_minus_one(n, s, p) == direct * (-1) ** (2 * n)


def test_resultant_xn_minus_one_in_K():
    a = KElt(3, 1)
    r = P.resultant_xn_minus_one(4, a, KElt.from_int(9))
    # (n+1)^2 - a^2 times (n-1)^2 + a^2
    assert r == (KElt.from_int(100) - a * a) * (KElt.from_int(64) + a * a)


@given(st.integers(-10 ** 6, 10 ** 6).filter(bool), st.sampled_from([2, 3, 5, 7]))
def test_valuation(n, p):
    v = valuation(n, p)
    assert n % p ** v == 0 and n % p ** (v + 1) != 0
    assert valuation(Fraction(1, n), p) == -v


@given(st.integers(1, 10 ** 20))
def test_factorize_recombines(n):
    f = factorize(n)
    assert math.prod(p ** e for p, e in f.items()) == n
    assert all(is_prime(p) for p in f)


def test_factorize_semiprime():
    assert factorize((10 ** 9 + 7) * (10 ** 9 + 9)) == {10 ** 9 + 7: 1, 10 ** 9 + 9: 1}
    assert factorize(6084) == {2: 2, 3: 2, 13: 2}


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 7))
def test_integer_root(x, k):
    n = x ** k
    r = integer_root(n, k)
    assert r ** k == n
    if abs(n) > 1:
        assert integer_root(n + 1, k) is None or integer_root(n + 1, k) ** k == n + 1
