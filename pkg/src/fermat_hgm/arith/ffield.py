"""Finite fields F_{ell^f} with dense log/exp tables.

Elements are encoded as integers: the coefficient vector (c_0, ..., c_{f-1})
of c_0 + c_1 x + ... in F_ell[x]/(modulus) maps to sum c_i ell^i.  The
tables make the field usable from numpy in bulk (point counts, character
sums), which is where all the time goes.
"""
from __future__ import annotations

import math
import random
from functools import lru_cache

import numpy as np

from .cyclo import cyclotomic_poly
from .kfield import is_prime, multiplicative_order

# --- polynomials over F_p, lists of ints low degree first -----------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def pmod(a, m, p):
    a = [x % p for x in a]
    _trim(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - dm
        for i, b in enumerate(m):
            a[i + k] = (a[i + k] - c * b) % p
        _trim(a)
    return a


def pdivmod(a, m, p):
    a = [x % p for x in a]
    _trim(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    q = [0] * max(0, len(a) - dm)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - dm
        q[k] = c
        for i, b in enumerate(m):
            a[i + k] = (a[i + k] - c * b) % p
        _trim(a)
    return _trim(q), a


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([x % p for x in out])


def psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def pgcd(a, b, p):
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def ppowmod(a, e, m, p):
    out, base = [1], pmod(a, m, p)
    while e:
        if e & 1:
            out = pmod(pmul(out, base, p), m, p)
        base = pmod(pmul(base, base, p), m, p)
        e >>= 1
    return out


def is_irreducible(m, p) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    n = len(m) - 1
    if n <= 0:
        return False
    x = [0, 1]
    if ppowmod(x, p ** n, m, p) != pmod(x, m, p):
        return False
    for r in _prime_factors(n):
        h = psub(ppowmod(x, p ** (n // r), m, p), x, p)
        if len(pgcd(h, m, p)) != 1:
            return False
    return True


def equal_degree_split(h, d, p, rng: random.Random):
    """Factor a squarefree monic h whose irreducible factors all have degree d."""
    n = len(h) - 1
    if n == d:
        return [h]
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    e = (p ** d - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        _trim(a)
        if len(a) <= 1:
            continue
        b = psub(ppowmod(a, e, h, p), [1], p)
        g = pgcd(b, h, p)
        if 1 < len(g) < len(h):
            rest, r = pdivmod(h, g, p)
            if r:
                raise ArithmeticError("split did not divide")
            return equal_degree_split(g, d, p, rng) + equal_degree_split(rest, d, p, rng)


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def cyclotomic_factors(ell: int, n: int) -> list[tuple[int, ...]]:
    """Irreducible factors of Phi_n mod ell, sorted; all have degree ord(ell mod n)."""
    if n % ell == 0:
        raise ValueError(f"{ell} divides {n}")
    f = multiplicative_order(ell, n)
    phi = [c % ell for c in cyclotomic_poly(n)]
    facs = equal_degree_split(phi, f, ell, random.Random(1000003 * ell + n))
    return sorted(tuple(g) for g in facs)


def first_irreducible(ell: int, k: int) -> tuple[int, ...]:
    """The least monic irreducible of degree k (ordered by encoded value)."""
    for code in range(ell ** k):
        m = [(code // ell ** i) % ell for i in range(k)] + [1]
        if is_irreducible(m, ell):
            return tuple(m)
    raise ArithmeticError("no irreducible polynomial found")


# --- the field ------------------------------------------------------------


class Fq:
    """The field F_ell[x]/(modulus) with generator, log and exp tables.

    When built for character work the modulus divides Phi_N, so the class of
    x is a primitive N-th root of unity; ``zeta_index`` is its discrete log.
    """

    def __init__(self, ell: int, modulus, N: int | None = None):
        if not is_prime(ell):
            raise ValueError(f"{ell} is not prime")
        self.ell = ell
        self.modulus = tuple(int(c) % ell for c in modulus)
        self.f = len(self.modulus) - 1
        self.q = ell ** self.f
        self.N = N
        self._basis_mats = None
        self._build_tables()
        if N is not None:
            x_code = ell if self.f > 1 else (-self.modulus[0]) % ell
            self.zeta = x_code
            self.zeta_index = int(self.log[x_code])
            if (self.q - 1) % N or math.gcd(self.zeta_index, self.q - 1) != (self.q - 1) // N:
                raise ArithmeticError("modulus does not define a primitive N-th root of unity")
        else:
            self.zeta = None
            self.zeta_index = None

    # scalar helpers
    def to_coeffs(self, a: int) -> list[int]:
        return [(a // self.ell ** i) % self.ell for i in range(self.f)]

    def from_coeffs(self, c) -> int:
        c = pmod(list(c), list(self.modulus), self.ell) if len(c) > self.f else list(c)
        return sum((x % self.ell) * self.ell ** i for i, x in enumerate(c))

    def mul(self, a: int, b: int) -> int:
        c = pmod(pmul(self.to_coeffs(a), self.to_coeffs(b), self.ell), list(self.modulus), self.ell)
        return self.from_coeffs(c)

    def add(self, a: int, b: int) -> int:
        return self.from_coeffs([x + y for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])

    def neg(self, a: int) -> int:
        return self.from_coeffs([-x for x in self.to_coeffs(a)])

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self.exp[(-int(self.log[a])) % (self.q - 1)])

    def embed_int(self, n: int) -> int:
        return n % self.ell

    def _slow_pow(self, a: int, e: int) -> int:
        c = ppowmod(self.to_coeffs(a), e, list(self.modulus), self.ell)
        return self.from_coeffs(c)

    def _mul_matrix(self, a: int) -> np.ndarray:
        f, ell = self.f, self.ell
        mat = np.zeros((f, f), dtype=np.int64)
        for j in range(f):
            col = [0] * j + [1]
            col = pmod(pmul(self.to_coeffs(a), col, ell), list(self.modulus), ell)
            col = col + [0] * (f - len(col))
            mat[:, j] = col
        return mat

    def _find_generator(self) -> int:
        order = self.q - 1
        primes = _prime_factors(order)
        start = self.ell if self.f > 1 else 2
        cands = list(range(start, self.q)) + list(range(1, start))
        for g in cands:
            if g == 0:
                continue
            if all(self._slow_pow(g, order // r) != 1 for r in primes):
                return g
        raise ArithmeticError("no generator found")

    def _build_tables(self):
        q, f, ell = self.q, self.f, self.ell
        self.gen = self._find_generator()
        coeffs = np.zeros((q - 1, f), dtype=np.int64)
        coeffs[0, 0] = 1
        filled = 1
        while filled < q - 1:
            # next block is the previous ones times gen^filled
            take = min(filled, q - 1 - filled)
            step = self._mul_matrix(self._slow_pow(self.gen, filled))
            coeffs[filled:filled + take] = (coeffs[:take] @ step.T) % ell
            filled += take
        weights = ell ** np.arange(f, dtype=np.int64)
        self.exp = coeffs @ weights
        log = np.full(q, -1, dtype=np.int64)
        log[self.exp] = np.arange(q - 1, dtype=np.int64)
        if (log[1:] < 0).any():
            raise ArithmeticError("generator powers do not cover the field")
        self.log = log
        self.digits = (np.arange(q, dtype=np.int64)[:, None] // weights[None, :]) % ell
        tr_basis = np.array([int(np.trace(self._mul_matrix(ell ** j))) % ell for j in range(f)],
                            dtype=np.int64)
        self.trace_table = (self.digits @ tr_basis) % ell

    def _code_of(self, row) -> int:
        return int(sum(int(c) * self.ell ** i for i, c in enumerate(row)))

    # vectorised helpers over arrays of codes
    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        zero = (a == 0) | (b == 0)
        s = (self.log[a] + self.log[b]) % (self.q - 1)
        out = self.exp[s]
        out[zero] = 0
        return out

    def vadd_const(self, a: np.ndarray, c: int) -> np.ndarray:
        """a + c for c in the prime field."""
        d0 = a % self.ell
        return a - d0 + (d0 + c) % self.ell

    def chi2_table(self) -> np.ndarray:
        """Quadratic character on codes: 0, 1 or -1."""
        t = np.where(self.log % 2 == 0, 1, -1).astype(np.int64)
        t[0] = 0
        return t

    def prime_field_codes(self) -> np.ndarray:
        return np.arange(self.ell, dtype=np.int64)


@lru_cache(maxsize=64)
def field_build(ell: int, N: int, factor_index: int = 0) -> Fq:
    """F_{ell^f} with f = ord(ell mod N), modulus the chosen factor of Phi_N."""
    if N % ell == 0:
        raise ValueError(f"ell = {ell} divides N = {N}")
    facs = cyclotomic_factors(ell, N)
    if not 0 <= factor_index < len(facs):
        raise ValueError(f"factor index {factor_index} out of range 0..{len(facs) - 1}")
    return Fq(ell, facs[factor_index], N)


@lru_cache(maxsize=64)
def field_extension(ell: int, k: int) -> Fq:
    """Some F_{ell^k}; only used where the choice of modulus is irrelevant."""
    if k == 1:
        return Fq(ell, (0, 1))
    return Fq(ell, first_irreducible(ell, k))
