"""Exact arithmetic in Z[zeta_N], reduced modulo the cyclotomic polynomial."""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from . import poly


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Phi_n with integer coefficients, low degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly.divmod_exact_int(num, list(cyclotomic_poly(d)))
            if any(rem):
                raise ArithmeticError("cyclotomic division failed")
    return tuple(num)


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of zeta^j for j = 0..n-1."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


class Cyc:
    """Element of Z[zeta_N] (or Q[zeta_N]) in the power basis 1, zeta, ..."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs):
        deg = totient(n)
        c = list(coeffs)
        if len(c) > deg:
            c = _reduce(n, c)
        c = c + [0] * (deg - len(c))
        self.n = n
        self.c = tuple(c)

    @classmethod
    def zeta_power(cls, n: int, j: int) -> "Cyc":
        return cls(n, _power_table(n)[j % n])

    @classmethod
    def const(cls, n: int, a) -> "Cyc":
        return cls(n, [a])

    @classmethod
    def from_exponent_counts(cls, n: int, counts) -> "Cyc":
        """sum_j counts[j] * zeta^j, for a length-n sequence of counts."""
        table = _power_table(n)
        deg = totient(n)
        acc = [0] * deg
        for j, m in enumerate(counts):
            if m:
                row = table[j]
                for i in range(deg):
                    if row[i]:
                        acc[i] += m * row[i]
        return cls(n, acc)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc.const(self.n, other)
        if other.n != self.n:
            raise ValueError("mixed cyclotomic levels")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Cyc(self.n, [a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        prod = [0] * (2 * len(self.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        prod[i + j] += a * b
        return Cyc(self.n, _reduce(self.n, prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out, base = Cyc.const(self.n, 1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.const(self.n, other)
        return isinstance(other, Cyc) and self.n == other.n and self.c == other.c

    def __hash__(self):
        return hash((self.n, self.c))

    def __repr__(self):
        return f"Cyc({self.n}, {list(self.c)})"

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def galois(self, k: int) -> "Cyc":
        """Image under zeta -> zeta^k."""
        if math.gcd(k, self.n) != 1:
            raise ValueError(f"{k} is not a unit mod {self.n}")
        table = _power_table(self.n)
        acc = [0] * len(self.c)
        for i, a in enumerate(self.c):
            if a:
                row = table[(i * k) % self.n]
                for j in range(len(acc)):
                    acc[j] += a * row[j]
        return Cyc(self.n, acc)

    def complex_conj(self) -> "Cyc":
        return self.galois(-1)

    def embed(self, k: int = 1) -> complex:
        z = cmath.exp(2j * math.pi * k / self.n)
        return sum(complex(a) * z ** i for i, a in enumerate(self.c))

    def norm(self):
        """Absolute norm to Q, computed exactly."""
        out = Cyc.const(self.n, 1)
        for k in range(1, self.n):
            if math.gcd(k, self.n) == 1:
                out = out * self.galois(k)
        if not out.is_rational():
            raise ArithmeticError("norm is not rational: arithmetic bug")
        return out.c[0]


def _reduce(n: int, coeffs: list) -> list:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        top = c[i]
        if top:
            c[i] = 0
            for j in range(deg):
                c[i - deg + j] -= top * phi[j]
    return c[:deg] + [0] * max(0, deg - len(c))


def min_poly_over_Q(v: Cyc) -> tuple[int, ...]:
    """Monic minimal polynomial of v over Q (low degree first).

    Built as the squarefree part of the full Galois orbit product; every
    coefficient must come out an exact integer.
    """
    n = v.n
    one = Cyc.const(n, 1)
    prod = [one]
    for k in range(1, n):
        if math.gcd(k, n) != 1:
            continue
        root = v.galois(k)
        nxt = [Cyc.const(n, 0)] * (len(prod) + 1)
        for i, a in enumerate(prod):
            nxt[i + 1] = nxt[i + 1] + a
            nxt[i] = nxt[i] - a * root
        prod = nxt
    coeffs = []
    for a in prod:
        if not a.is_rational():
            raise ArithmeticError("orbit product is not rational: arithmetic bug")
        x = a.c[0]
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ArithmeticError("orbit product is not integral: arithmetic bug")
            x = int(x)
        coeffs.append(int(x))
    sf = poly.squarefree_part(coeffs)
    return tuple(int(x) for x in sf)
