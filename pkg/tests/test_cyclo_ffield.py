import cmath
import math

from hypothesis import given
from hypothesis import strategies as st

from fermat_hgm.arith import Cyc, cyclotomic_factors, cyclotomic_poly, field_build, min_poly_over_Q
from fermat_hgm.arith import poly as P
from fermat_hgm.arith.ffield import Fq, pmod
from fermat_hgm.hgmsum import char_to_omega, gauss_sum, gauss_table, jacobi_sum

cycs = st.lists(st.integers(-5, 5), min_size=15, max_size=15).map(lambda c: Cyc(15, c))


def test_cyclotomic_poly():
    assert cyclotomic_poly(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)
    for n in range(1, 40):
        z = cmath.exp(2j * math.pi / n)
        assert abs(sum(c * z ** i for i, c in enumerate(cyclotomic_poly(n)))) < 1e-9


@given(cycs, cycs, st.sampled_from([1, 2, 4, 7, 8, 11, 13, 14]))
def test_galois_is_ring_hom(a, b, k):
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    assert (a + b).galois(k) == a.galois(k) + b.galois(k)


@given(cycs, cycs)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(cycs)
def test_min_poly_integral_and_vanishing(a):
    mp = min_poly_over_Q(a)
    assert all(isinstance(c, int) for c in mp) and mp[-1] == 1
    for k in (1, 2, 7):
        x = a.embed(k)
        assert abs(sum(c * x ** i for i, c in enumerate(mp))) < 1e-6 * (1 + abs(x)) ** len(mp)


def test_cyclotomic_factors_multiply_back():
    for ell in (7, 11, 19, 31):
        facs = cyclotomic_factors(ell, 15)
        prod = [1]
        for f in facs:
            prod = [c % ell for c in P.mul(prod, list(f))]
        assert prod == [c % ell for c in cyclotomic_poly(15)]


def test_field_tables():
    F = field_build(11, 15)
    assert F.q == 121 and F.f == 2
    assert F.power(F.zeta, 15) == 1 and F.power(F.zeta, 5) != 1 and F.power(F.zeta, 3) != 1
    for a in range(1, F.q, 7):
        assert F.mul(a, F.inv(a)) == 1
    G = Fq(7, (1, 0, 1))  # x^2 + 1 is irreducible mod 7
    assert G.q == 49 and pmod([0, 0, 1], [1, 0, 1], 7) == [6]


def _gauss_direct(F, k):
    n = F.q - 1
    tot = 0
    for j in range(n):
        x = int(F.exp[j])
        tot += cmath.exp(2j * math.pi * j * k / n) * cmath.exp(2j * math.pi * int(F.trace_table[x]) / F.ell)
    return tot


def test_gauss_table_against_direct_sum():
    F = field_build(11, 15)
    G = gauss_table(F)
    for k in (0, 1, 8, 37, 119):
        assert abs(G[k] - _gauss_direct(F, k)) < 1e-8
    assert abs(gauss_sum(F, 0) + 1) < 1e-9
    for k in range(1, F.q - 1):
        assert abs(abs(G[k]) ** 2 - F.q) < 1e-6


def test_jacobi_against_gauss():
    F = field_build(31, 15)
    for i, j in ((2, -8), (-6, 8), (1, 4), (3, 5)):
        if (i + j) % 15 == 0:
            continue
        J = jacobi_sum(F, i, j)
        a, b, c = (char_to_omega(F, e) for e in (i, j, i + j))
        want = gauss_sum(F, a) * gauss_sum(F, b) / gauss_sum(F, c)
        assert abs(J.embed(1) - want) < 1e-6
