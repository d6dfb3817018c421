"""Dense univariate polynomials as coefficient lists, lowest degree first.

Coefficients may be ints, Fractions, or any ring type supporting + - *.
The zero polynomial is the empty list; ``degree([])`` is -1.
"""
from __future__ import annotations

import math
from fractions import Fraction


def trim(p) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def add(p, q) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q) -> list:
    return add(p, [-c for c in q])


def scale(p, c) -> list:
    return trim([c * a for a in p])


def mul(p, q) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p, e: int) -> list:
    out, base = [1], list(p)
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p, q) -> list:
    """p(q(x))."""
    acc = []
    for c in reversed(p):
        acc = add(mul(acc, q), [c])
    return acc


def deriv(p) -> list:
    return trim([i * p[i] for i in range(1, len(p))])


def divmod_field(p, d):
    """Division with remainder over a field (Fraction arithmetic)."""
    p = [Fraction(c) for c in trim(p)]
    d = [Fraction(c) for c in trim(d)]
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(p) - len(d) + 1)
    while len(p) >= len(d) and p:
        k = len(p) - len(d)
        c = p[-1] / d[-1]
        q[k] = c
        for i, b in enumerate(d):
            p[i + k] -= c * b
        p = trim(p)
    return trim(q), p


def divmod_exact_int(p, d):
    """Division by a monic integer polynomial, staying in Z[x]."""
    p = list(p)
    d = trim(d)
    if d[-1] not in (1, -1):
        raise ValueError("divisor must be monic up to sign")
    q = [0] * max(0, len(p) - len(d) + 1)
    for k in range(len(p) - len(d), -1, -1):
        c = p[k + len(d) - 1] * d[-1]
        q[k] = c
        for i, b in enumerate(d):
            p[i + k] -= c * b
    return q, trim(p)


def gcd(p, q) -> list:
    """Monic gcd over Q."""
    a, b = trim(p), trim(q)
    while b:
        _, r = divmod_field(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def primitive(p) -> list[int]:
    """Scale a rational polynomial to a primitive integer one with positive lead."""
    p = [Fraction(c) for c in trim(p)]
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def squarefree_part(p) -> list:
    """Product of the distinct irreducible factors, made monic."""
    p = trim(p)
    if degree(p) <= 0:
        return [1]
    g = gcd(p, deriv(p))
    q, r = divmod_field(p, g)
    if r:
        raise ArithmeticError("gcd does not divide")
    lead = q[-1]
    out = [c / lead for c in q]
    return [int(c) if c.denominator == 1 else c for c in out]


def resultant(p, q):
    """Resultant over a field by the Euclidean recursion (exact Fractions)."""
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    if not p or not q:
        return Fraction(0)
    m, n = len(p) - 1, len(q) - 1
    if n == 0:
        return q[0] ** m
    if m == 0:
        return p[0] ** n
    if m < n:
        sign = -1 if (m * n) % 2 else 1
        return sign * resultant(q, p)
    # Res(p, q) = (-1)^{mn} lc(q)^{m - deg r} Res(q, r) with r = p mod q
    _, r = divmod_field(p, q)
    if not r:
        return Fraction(0)
    k = len(r) - 1
    sign = -1 if (m * n) % 2 else 1
    return sign * q[-1] ** (m - k) * resultant(q, r)


def power_sums_quadratic(s1, prod, n: int) -> list:
    """Power sums p_0..p_n of the roots of z^2 - s1 z + prod (Newton)."""
    sums = [s1 * 0 + 2, s1]
    for k in range(2, n + 1):
        sums.append(s1 * sums[k - 1] - prod * sums[k - 2])
    return sums[: n + 1]


def resultant_xn_minus_one(n: int, s1, prod):
    """Res(X^n - 1, X^2 - s1 X + prod) = (r1^n - 1)(r2^n - 1), exactly.

    ``s1`` and ``prod`` may live in any commutative ring (e.g. KElt); the
    value is prod^n - p_n + 1 where p_n is the n-th power sum of the roots.
    """
    sums = power_sums_quadratic(s1, prod, n)
    return prod ** n - sums[n] + 1


def to_str(p, var: str = "x") -> str:
    """Human form, highest degree first, e.g. 'x^2 - x - 1'."""
    p = trim(p)
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append(("-" if neg else "+", body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in terms[1:]:
        out += f" {s} {body}"
    return out


def from_str(s: str, var: str = "x") -> list[int]:
    """Parse the output format of ``to_str`` (integer coefficients only)."""
    s = s.replace(" ", "").replace("−", "-").replace("²", "^2")
    if s[0] not in "+-":
        s = "+" + s
    out: dict[int, int] = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        tok = s[i + 1 : j]
        i = j
        if var in tok:
            coef, _, rest = tok.partition(var)
            coef = coef.rstrip("*")
            c = int(coef) if coef else 1
            e = int(rest[1:]) if rest.startswith("^") else 1
        else:
            c, e = int(tok), 0
        out[e] = out.get(e, 0) + sign * c
    deg = max(out)
    return trim([out.get(k, 0) for k in range(deg + 1)])
