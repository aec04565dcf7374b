"""Expressions over scalars and tensor words, by recursive descent.

Grammar, loosest binding first::

    sum     := tensor (('+' | '-') tensor)*
    tensor  := product ('@' product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' exponent)?
    atom    := INT | NAME | '(' sum ')'

NAME is s, q, a generator or a previously defined name.  q^(1/2) is s.
Values are Tensors: formal sums of tuples of words, so that the same
evaluator handles scalars (no legs), relation words (one leg, word
concatenation under '*') and Hopf elements ('@' adds legs).
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from ..exactla import ONE, Scalar, as_scalar

TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\S))")


class Tensor:
    """Formal sum of word tuples; legs is None for a bare scalar."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs, terms):
        self.legs = legs
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def scalar(cls, c) -> "Tensor":
        return cls(None, {(): as_scalar(c)})

    @classmethod
    def word(cls, name) -> "Tensor":
        return cls(1, {((name,),): ONE})

    def as_scalar(self):
        if self.legs is not None:
            return None
        return self.terms.get((), Scalar(0))

    def _at(self, legs: int) -> "Tensor":
        if self.legs is None:
            return Tensor(legs, {((),) * legs: c for c in self.terms.values()})
        return self

    def __add__(self, other: "Tensor") -> "Tensor":
        legs = self.legs if self.legs is not None else other.legs
        a, b = (self._at(legs), other._at(legs)) if legs is not None else (self, other)
        if a.legs != b.legs:
            raise ValueError(f"cannot add a {a.legs}-leg and a {b.legs}-leg expression")
        out = dict(a.terms)
        for k, v in b.terms.items():
            out[k] = out.get(k, Scalar(0)) + v
        return Tensor(legs, out)

    def __neg__(self) -> "Tensor":
        return Tensor(self.legs, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other: "Tensor") -> "Tensor":
        legs = self.legs if self.legs is not None else other.legs
        if legs is None:
            return Tensor.scalar(self.as_scalar() * other.as_scalar())
        a, b = self._at(legs), other._at(legs)
        if a.legs != b.legs:
            raise ValueError(f"cannot multiply a {a.legs}-leg and a {b.legs}-leg expression")
        out: dict = {}
        for ka, va in a.terms.items():
            for kb, vb in b.terms.items():
                k = tuple(u + v for u, v in zip(ka, kb))
                out[k] = out.get(k, Scalar(0)) + va * vb
        return Tensor(legs, out)

    def tensor(self, other: "Tensor") -> "Tensor":
        a = self._at(1) if self.legs is None else self
        b = other._at(1) if other.legs is None else other
        out: dict = {}
        for ka, va in a.terms.items():
            for kb, vb in b.terms.items():
                k = ka + kb
                out[k] = out.get(k, Scalar(0)) + va * vb
        return Tensor(a.legs + b.legs, out)

    def scale(self, c) -> "Tensor":
        return Tensor(self.legs, {k: v * c for k, v in self.terms.items()})


class Parser:
    def __init__(self, text: str, names: dict, line: int | None = None, col0: int = 0, allow_s: bool = True):
        self.text = text
        self.names = names
        self.line = line
        self.col0 = col0
        self.allow_s = allow_s
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            start = m.start(m.lastindex)
            self.tokens.append((m.group(m.lastindex), m.lastindex, start))
            pos = m.end()
        self.i = 0

    def error(self, msg, col=None):
        if col is None:
            col = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise ParseError(msg, self.line, self.col0 + col + 1)

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Tensor:
        if not self.tokens:
            self.error("empty expression")
        val = self.sum()
        if self.i < len(self.tokens):
            self.error(f"unexpected {self.peek()!r}")
        return val

    def _wrap(self, fn, col):
        try:
            return fn()
        except (ValueError, ZeroDivisionError) as exc:
            self.error(str(exc), col)

    def sum(self) -> Tensor:
        val = self.tensor()
        while self.peek() in ("+", "-"):
            op, _, col = self.take()
            rhs = self.tensor()
            val = self._wrap(lambda: val + rhs if op == "+" else val + (-rhs), col)
        return val

    def tensor(self) -> Tensor:
        val = self.product()
        while self.peek() == "@":
            _, _, col = self.take()
            rhs = self.product()
            val = self._wrap(lambda: val.tensor(rhs), col)
        return val

    def product(self) -> Tensor:
        val = self.unary()
        while self.peek() in ("*", "/"):
            op, _, col = self.take()
            rhs = self.unary()
            if op == "*":
                val = self._wrap(lambda: val * rhs, col)
            else:
                c = rhs.as_scalar()
                if c is None:
                    self.error("can only divide by a scalar", col)
                if not c:
                    self.error("division by zero", col)
                val = val.scale(c.inverse())
        return val

    def unary(self) -> Tensor:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Tensor:
        base_col = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        base = self.atom()
        if self.peek() != "^":
            return base
        _, _, col = self.take()
        if self.peek() == "-":
            self.take()
            exp = -self._exponent_atom()
        else:
            exp = self._exponent_atom()
        c = base.as_scalar()
        if c is None:
            self.error("only scalars can be raised to a power", base_col)
        if exp.denominator == 1:
            if not c and exp < 0:
                self.error("division by zero", col)
            return Tensor.scalar(c ** exp.numerator)
        if c == Scalar.q(1) and exp.denominator == 2:
            return Tensor.scalar(Scalar.s(exp.numerator))
        self.error("fractional exponents are only allowed on q, in halves", col)

    def _exponent_atom(self) -> Fraction:
        col = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        if self.peek() == "(":
            self.take()
            val = self.sum()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
        else:
            tok = self.take() if self.i < len(self.tokens) else None
            if tok is None or tok[1] != 1:
                self.error("expected an integer exponent", col)
            val = Tensor.scalar(int(tok[0]))
        c = val.as_scalar()
        if c is None or not c.is_constant():
            self.error("exponent must be a rational constant", col)
        return c.to_fraction()

    def atom(self) -> Tensor:
        if self.i >= len(self.tokens):
            self.error("unexpected end of expression")
        tok, kind, col = self.take()
        if kind == 1:
            return Tensor.scalar(int(tok))
        if kind == 2:
            if tok in self.names:
                return self.names[tok]
            if tok in ("s", "q"):
                if not self.allow_s:
                    self.error(f"{tok} is not available over the rational field", col)
                return Tensor.scalar(Scalar.s(1) if tok == "s" else Scalar.q(1))
            self.error(f"unknown name {tok!r}", col)
        if tok == "(":
            val = self.sum()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return val
        self.error(f"unexpected {tok!r}", col)


def parse_expression(text: str, names: dict | None = None, line: int | None = None,
                     col0: int = 0, allow_s: bool = True) -> Tensor:
    return Parser(text, names or {}, line, col0, allow_s).parse()


def parse_scalar(text: str, line: int | None = None, col0: int = 0, allow_s: bool = True) -> Scalar:
    val = parse_expression(text, {}, line, col0, allow_s)
    c = val.as_scalar()
    if c is None:
        raise ParseError("expected a scalar", line, col0 + 1)
    return c
