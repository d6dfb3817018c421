"""Arithmetic in the ring of integers of Q(sqrt5) and its prime ideals.

Elements are stored in half-integer coordinates: ``KElt(u, v)`` is
``(u + v*sqrt5)/2`` with ``u`` and ``v`` of equal parity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True, order=True)
class KElt:
    u: int
    v: int = 0

    def __post_init__(self):
        if (self.u - self.v) % 2:
            raise ValueError(f"({self.u} + {self.v}*sqrt5)/2 is not integral")

    @classmethod
    def from_int(cls, n: int) -> "KElt":
        return cls(2 * n, 0)

    @classmethod
    def coerce(cls, x) -> "KElt":
        if isinstance(x, KElt):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        raise TypeError(f"cannot coerce {x!r} to KElt")

    def __add__(self, other):
        other = KElt.coerce(other)
        return KElt(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return KElt(-self.u, -self.v)

    def __sub__(self, other):
        return self + (-KElt.coerce(other))

    def __rsub__(self, other):
        return KElt.coerce(other) - self

    def __mul__(self, other):
        other = KElt.coerce(other)
        # ((u1 + v1 s)(u2 + v2 s))/4 with s^2 = 5, rescaled to halves
        u = self.u * other.u + 5 * self.v * other.v
        v = self.u * other.v + self.v * other.u
        return KElt(u // 2, v // 2)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not integral in general")
        out, base = KElt(2, 0), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> "KElt":
        return KElt(self.u, -self.v)

    def norm(self) -> int:
        return (self.u * self.u - 5 * self.v * self.v) // 4

    def trace(self) -> int:
        return self.u

    def is_rational(self) -> bool:
        return self.v == 0

    def embed(self, sign: int = 1) -> float:
        return (self.u + sign * self.v * SQRT5) / 2

    def minpoly(self) -> tuple[int, ...]:
        """Monic minimal polynomial over Q, coefficients low to high."""
        if self.v == 0:
            return (-(self.u // 2), 1)
        return (self.norm(), -self.trace(), 1)

    def weil_ok(self, q: int) -> bool:
        """Both real embeddings bounded by 2*sqrt(q), decided exactly."""
        # |u +- v sqrt5| <= 4 sqrt(q)  <=>  checks on squares
        for s in (1, -1):
            if not _abs_le_sqrt(self.u, s * self.v, 16 * q):
                return False
        return True

    def __str__(self):
        if self.v == 0:
            return str(self.u // 2)
        if self.u % 2 == 0:
            a, b = self.u // 2, self.v // 2
            bs = "" if abs(b) == 1 else str(abs(b))
            sign = "-" if b < 0 else "+"
            if a == 0:
                return f"{'-' if b < 0 else ''}{bs}sqrt5"
            return f"{a}{sign}{bs}sqrt5"
        bs = "" if abs(self.v) == 1 else str(abs(self.v))
        sign = "-" if self.v < 0 else "+"
        return f"({self.u}{sign}{bs}sqrt5)/2"


def _abs_le_sqrt(u: int, w: int, bound: int) -> bool:
    """Decide |u + w*sqrt5| <= sqrt(bound) exactly."""
    # x = u + w sqrt5; x^2 = u^2 + 5 w^2 + 2 u w sqrt5
    a = u * u + 5 * w * w - bound
    b = 2 * u * w
    # need a + b sqrt5 <= 0
    if b >= 0:
        return a <= 0 and (a * a >= 5 * b * b)
    if a <= 0:
        return True
    return a * a <= 5 * b * b


ZERO = KElt(0, 0)
ONE = KElt(2, 0)
SQRT5_ELT = KElt(0, 2)
PHI = KElt(1, 1)


def recognize(x1: float, x2: float, tol: float = 1e-4) -> KElt:
    """Recover (u + v sqrt5)/2 from its two real embeddings."""
    su = x1 + x2
    dv = (x1 - x2) / SQRT5
    u, v = round(su), round(dv)
    if (u - v) % 2:
        raise ValueError(f"no integral point near ({x1!r}, {x2!r})")
    k = KElt(u, v)
    if abs(k.embed(1) - x1) > tol or abs(k.embed(-1) - x2) > tol:
        raise ValueError(f"no integral point within {tol} of ({x1!r}, {x2!r})")
    return k


def sqrt_mod(n: int, p: int) -> list[int]:
    """All square roots of n modulo the prime p, ascending."""
    n %= p
    if p == 2:
        return [n]
    if n == 0:
        return [0]
    if pow(n, (p - 1) // 2, p) != 1:
        return []
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return sorted({r, p - r})


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def multiplicative_order(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


@dataclass(frozen=True)
class PrimeSlotK:
    """A prime ideal of Q(sqrt5) lying over the rational prime ``ell``.

    Split ideals carry ``root``, a square root of 5 mod ell; the ideal is
    ``(ell, sqrt5 - root)``.
    """

    ell: int
    kind: str
    root: int | None = None
    norm: int = field(init=False)
    rel_deg_F: int = field(init=False)

    def __post_init__(self):
        if self.kind not in ("split", "inert", "ramified"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "split":
            if self.root is None or (self.root * self.root - 5) % self.ell:
                raise ValueError(f"{self.root} is not a square root of 5 mod {self.ell}")
        object.__setattr__(self, "norm", self.ell ** 2 if self.kind == "inert" else self.ell)
        f_k = 2 if self.kind == "inert" else 1
        if self.ell in (3, 5):
            rel = 1
        else:
            rel = multiplicative_order(self.ell, 15) // f_k
        object.__setattr__(self, "rel_deg_F", rel)

    @classmethod
    def over(cls, ell: int, root: int | None = None) -> "PrimeSlotK":
        kind = slot_kind(ell)
        if kind == "split":
            roots = sqrt_mod(5, ell)
            if root is None:
                root = roots[0]
            elif root % ell not in roots:
                raise ValueError(f"{root} is not a square root of 5 mod {ell}")
            return cls(ell, kind, root % ell)
        return cls(ell, kind)

    def conjugate(self) -> "PrimeSlotK":
        if self.kind != "split":
            return self
        return PrimeSlotK(self.ell, "split", (-self.root) % self.ell)

    def reduce(self, x: KElt) -> int | tuple[int, int]:
        """Image of x in the residue field (an int mod ell for norm-ell slots)."""
        if self.kind == "inert":
            inv2 = pow(2, -1, self.ell)
            return (x.u * inv2 % self.ell, x.v * inv2 % self.ell)
        r = self.root if self.kind == "split" else 0
        if self.ell == 2:
            raise ValueError("reduction at 2 is not supported")
        return (x.u + x.v * r) * pow(2, -1, self.ell) % self.ell

    def label(self) -> str:
        if self.kind == "split":
            return f"{self.ell}s{self.root}"
        return f"{self.ell}{self.kind[0]}"

    def __str__(self):
        return self.label()


def slot_kind(ell: int) -> str:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if ell == 5:
        return "ramified"
    if ell == 2:
        return "inert"
    return "split" if ell % 5 in (1, 4) else "inert"


def slots_up_to(norm_cap: int, skip=(2, 3, 5)) -> list[PrimeSlotK]:
    """All prime ideals of norm at most ``norm_cap``, both split ideals listed."""
    out = []
    for ell in range(2, norm_cap + 1):
        if ell in skip or not is_prime(ell):
            continue
        kind = slot_kind(ell)
        if kind == "split":
            for r in sqrt_mod(5, ell):
                out.append(PrimeSlotK(ell, "split", r))
        elif kind == "inert" and ell * ell <= norm_cap:
            out.append(PrimeSlotK(ell, "inert"))
    return out


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)
