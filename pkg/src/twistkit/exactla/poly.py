"""Dense univariate polynomials over the integers.

A polynomial is a tuple of Python ints, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from math import gcd

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)


def trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def const(c: int) -> Poly:
    return (c,) if c else ()


def degree(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, neg(b))


def scale(a: Poly, k: int) -> Poly:
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def content(a: Poly) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a: Poly) -> Poly:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return a
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(c // g for c in a)


def divmod_exact(a: Poly, b: Poly) -> tuple[Poly, Poly] | None:
    """Long division over Z; None if some quotient coefficient is fractional."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), tuple(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        t, r = divmod(c, lb)
        if r:
            return None
        q[k - db] = t
        for j in range(db + 1):
            a[k - db + j] -= t * b[j]
    return trim(q), trim(a)


def divexact(a: Poly, b: Poly) -> Poly:
    if len(b) == 1:
        d = b[0]
        out = []
        for c in a:
            t, r = divmod(c, d)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(t)
        return tuple(out)
    res = divmod_exact(a, b)
    if res is None or res[1]:
        raise ArithmeticError("inexact polynomial division")
    return res[0]


def prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        a = list(trim(a))
    return tuple(a)


def _valuation(a: Poly) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    return 0


def pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd (positive leading coefficient) of two integer polynomials."""
    if not a:
        return primitive(b) if b else ONE
    if not b:
        return primitive(a)
    if len(a) == 1 or len(b) == 1:
        return ONE
    va, vb = _valuation(a), _valuation(b)
    v = min(va, vb)
    a, b = a[va:], b[vb:]
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = prem(a, b)
        a, b = b, primitive(r)
    if b:  # nonzero constant remainder: coprime
        g = ONE
    else:
        g = primitive(a)
    if v:
        g = (0,) * v + g
    return g


def evaluate(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
