"""p-adic valuations of rationals and polynomial contents."""
from __future__ import annotations

import math
from fractions import Fraction

INF = math.inf


def valuation(x, p: int):
    """v_p(x) for a nonzero rational; +inf for zero."""
    x = Fraction(x)
    if x == 0:
        return INF
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def content_valuation(coeffs, p: int):
    """Minimum valuation over the coefficients of a polynomial."""
    vals = [valuation(c, p) for c in coeffs if c != 0]
    return min(vals) if vals else INF


def unit_part(x, p: int) -> Fraction:
    """x * p^{-v_p(x)}."""
    x = Fraction(x)
    v = valuation(x, p)
    return x / Fraction(p) ** v


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite n."""
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"no factor found for {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n|: trial division, then Pollard-Brent."""
    from .kfield import is_prime
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    d = 2
    while d < 1000 and d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = integer_root(m, 2)
        g = r if r is not None else _pollard_brent(m)
        stack += [g, m // g]
    return dict(sorted(out.items()))


def integer_root(n: int, k: int):
    """The integer x with x^k = n, or None.  No floating point."""
    if n < 0:
        if k % 2 == 0:
            return None
        x = integer_root(-n, k)
        return None if x is None else -x
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x ** k == n else None
