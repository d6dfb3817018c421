"""The prime C(ell) beyond which the residual representation is irreducible,
for solutions with ell not dividing b."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..arith import KElt
from ..arith import poly as P
from ..arith.padic import factorize

# Local factors of the Jacobian at the prime above 2 (computed externally)
A_J_AT_2 = (-1, -8)
NORM = {2: 4, 3: 9, 5: 5}


@dataclass
class BoundResult:
    ell: int
    C: int
    support: frozenset
    by_f: dict = field(default_factory=dict)  # f -> largest prime for that f
    factored: dict = field(default_factory=dict)  # p -> exponent in the full product
    n_values: int = 0

    @property
    def product(self) -> int:
        return math.prod(p ** e for p, e in self.factored.items())

    def __str__(self):
        if self.ell == 2:
            return f"{self.product} -> C(2)={self.C}"
        return f"C({self.ell})={self.C}"


def candidate_a_J(n: int) -> list[KElt]:
    """a = (al + be sqrt5)/2 with al = be mod 2, |al| <= 4 sqrt(n) and
    |(al^2 + 5 be^2)/2 - 4n| <= 4n."""
    out = []
    amax = math.isqrt(16 * n)
    bmax = math.isqrt(16 * n // 5)
    for al in range(-amax, amax + 1):
        for be in range(-bmax, bmax + 1):
            if (al - be) % 2:
                continue
            if abs(Fraction(al * al + 5 * be * be, 2) - 4 * n) <= 4 * n:
                out.append(KElt(al, be))
    return out


def _res_norm(a: KElt, n: int, c: int) -> int:
    """K-norm of Res(X^c - 1, x^2 - a x + n)."""
    r = P.resultant_xn_minus_one(c, a, KElt.from_int(n))
    return r.norm()


def irreducibility_bound(ell: int) -> BoundResult:
    if ell not in NORM:
        raise ValueError("ell must be 2, 3 or 5")
    n = NORM[ell]
    if ell == 2:
        values, fs, c = [KElt.from_int(a) for a in A_J_AT_2], (1,), 1
    else:
        # the Hasse-Weil box is taken at N(l); f only enters through N(l)^f
        values, fs, c = candidate_a_J(n), (1, 2), 4
    factored: dict = {}
    by_f = {}
    for f in fs:
        best = 0
        for a in values:
            r = _res_norm(a, n ** f, c)
            if r == 0:
                continue
            for p, e in factorize(r).items():
                factored[p] = factored.get(p, 0) + e
                best = max(best, p)
        by_f[f] = best
    support = frozenset(factored)
    return BoundResult(ell, max(support), support, by_f, dict(sorted(factored.items())), len(values))
