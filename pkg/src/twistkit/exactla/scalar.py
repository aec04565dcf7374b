"""Elements of Q(s), the rational function field in one variable.

q is not a separate symbol: throughout the package q = s**2, so s plays
the role of q^(1/2).  Constants (degree-0 numerator and denominator) are
the field Q, and arithmetic on them takes an integer-only fast path.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import DivisionByZero
from . import poly as P


def _normalize(n: tuple, d: tuple) -> tuple[tuple, tuple]:
    if not d:
        raise DivisionByZero("division by zero")
    if not n:
        return (), (1,)
    if len(n) == 1 and len(d) == 1:
        a, b = n[0], d[0]
        g = gcd(a, b)
        if b < 0:
            g = -g
        return (a // g,), (b // g,)
    g = P.pgcd(n, d)
    if len(g) > 1:
        n = P.divexact(n, g)
        d = P.divexact(d, g)
    c = gcd(P.content(n), P.content(d))
    if d[-1] < 0:
        c = -c
    if c != 1:
        n = tuple(x // c for x in n)
        d = tuple(x // c for x in d)
    return n, d


class Scalar:
    """A normalized fraction num/den of integer polynomials in s.

    Invariants: gcd(num, den) = 1, the leading coefficient of den is
    positive, and the integer coefficients of num and den share no common
    factor.  Equal values therefore have identical stored forms.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _raw=False):
        if _raw:
            self.num, self.den = num, den
        elif isinstance(num, (Fraction, Scalar)) or isinstance(den, (Fraction, Scalar)):
            r = _lift(num) / _lift(den)
            self.num, self.den = r.num, r.den
        else:
            self.num, self.den = _normalize(_coerce_poly(num), _coerce_poly(den))
        self._hash = None

    # construction helpers
    @classmethod
    def s(cls, power: int = 1) -> "Scalar":
        if power >= 0:
            return cls((0,) * power + (1,), (1,), _raw=True)
        return cls((1,), (0,) * (-power) + (1,), _raw=True)

    @classmethod
    def q(cls, power: int = 1) -> "Scalar":
        return cls.s(2 * power)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Scalar":
        return cls(*_normalize(P.const(f.numerator), (f.denominator,)), _raw=True)

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def __bool__(self) -> bool:
        return bool(self.num)

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # arithmetic
    def __add__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if len(b) == 1 and len(d) == 1 and len(a) == 1 and len(c) == 1:
            return Scalar(*_normalize((a[0] * d[0] + c[0] * b[0],) if a[0] * d[0] + c[0] * b[0] else (), (b[0] * d[0],)), _raw=True)
        if b == d:
            return Scalar(*_normalize(P.add(a, c), b), _raw=True)
        return Scalar(*_normalize(P.add(P.mul(a, d), P.mul(c, b)), P.mul(b, d)), _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(P.neg(self.num), self.den, _raw=True)

    def __sub__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.is_constant() and other.is_constant():
            return Scalar(*_normalize((self.num[0] * other.num[0],), (self.den[0] * other.den[0],)), _raw=True)
        return Scalar(*_normalize(P.mul(self.num, other.num), P.mul(self.den, other.den)), _raw=True)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return Scalar(*_normalize(self.den, self.num), _raw=True)

    def __truediv__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise DivisionByZero("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison
    def __eq__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)

    def evaluate(self, s_value):
        """Evaluate at a number for s (exact if s_value is a Fraction)."""
        return Fraction(P.evaluate(self.num, s_value)) / P.evaluate(self.den, s_value)


def _coerce_poly(x) -> tuple:
    if isinstance(x, tuple):
        return P.trim(x)
    if isinstance(x, int):
        return P.const(x)
    if isinstance(x, Fraction):
        return P.const(x.numerator)
    raise TypeError(f"cannot build a polynomial from {x!r}")


def _lift(x) -> "Scalar":
    if isinstance(x, tuple):
        return Scalar(*_normalize(P.trim(x), (1,)), _raw=True)
    return as_scalar(x)


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar((x,) if x else (), (1,), _raw=True)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    return NotImplemented


def as_scalar(x) -> Scalar:
    out = _as_scalar(x)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} to Scalar")
    return out


ZERO = Scalar((), (1,), _raw=True)
ONE = Scalar((1,), (1,), _raw=True)


def qnumber(b: int) -> Scalar:
    """The quantum integer [b]_q = (q^b - q^-b) / (q - q^-1)."""
    return (Scalar.q(b) - Scalar.q(-b)) / (Scalar.q(1) - Scalar.q(-1))


def _format_poly(coeffs: tuple, var: str, step: int) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        e = i // step
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if mono:
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        else:
            body = str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(x: Scalar) -> str:
    """Render in q when every power of s present is even, otherwise in s."""
    n, d = x.num, x.den
    if not n:
        return "0"
    even = all(c == 0 for i, c in enumerate(n) if i % 2) and all(c == 0 for i, c in enumerate(d) if i % 2)
    var, step = ("q", 2) if even else ("s", 1)
    # Laurent monomial denominators read better as negative exponents
    if len(d) > 1 and all(c == 0 for c in d[:-1]) and d[-1] == 1:
        shift = (len(d) - 1)
        nz = [i for i, c in enumerate(n) if c]
        if len(nz) == 1:
            e = (nz[0] - shift) // step
            c = n[nz[0]]
            if e == 0:
                return str(c)
            mono = f"{var}^{e}" if e != 1 else var
            if c == 1:
                return mono
            if c == -1:
                return "-" + mono
            return f"{c}*{mono}"
    num = _format_poly(n, var, step)
    if d == (1,):
        return num
    den = _format_poly(d, var, step)
    if len([c for c in n if c]) > 1:
        num = f"({num})"
    if len([c for c in d if c]) > 1 or "*" in den or "^" in den:
        den = f"({den})"
    return f"{num}/{den}"
