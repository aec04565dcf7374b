"""Quasitriangular structures known only through their matrix on V⊗V.

An element of H^⊗m built from R is stored as an ordered product of
placed factors R^{±1}_{(a,b)}: the first tensor component of R sits on
leg a and the second on leg b.  Coproducts and counits act on these
products by the rewrite rules

    (Δ⊗id)(R) = R13·R23,    (id⊗Δ)(R) = R13·R12,    (ε⊗id)(R) = 1 = (id⊗ε)(R),

extended to R⁻¹ by inverting, so no element of H itself is ever needed.
"""
from __future__ import annotations

from ..errors import LegOutOfRange, SizeMismatch
from ..exactla import ONE, Matrix
from ..quadalg import place_operator
from .elements import HopfExpr


def flip(dim: int) -> Matrix:
    """The swap v⊗w -> w⊗v on V⊗V."""
    return Matrix.from_columns(dim * dim, [{(j % dim) * dim + j // dim: ONE} for j in range(dim * dim)])


class QuasitriangularContext:
    """Matrix of R on V⊗V, its inverse, and optionally the Hopf algebra acting on V."""

    def __init__(self, dim: int, R: Matrix, R_inverse: Matrix | None = None, hopf=None, name: str = ""):
        if R.shape != (dim * dim, dim * dim):
            raise SizeMismatch(f"R must act on V⊗V, got shape {R.shape}")
        self.dim = dim
        self.R = R
        self.R_inverse = R.inverse() if R_inverse is None else R_inverse
        self.hopf = hopf
        self.name = name
        self._placed: dict = {}

    def __repr__(self):
        return f"QuasitriangularContext({self.name or self.dim})"

    def placed(self, a: int, b: int, sign: int, m: int) -> Matrix:
        key = (a, b, sign, m)
        out = self._placed.get(key)
        if out is None:
            base = self.R if sign > 0 else self.R_inverse
            if a > b:
                sw = flip(self.dim)
                base = sw @ base @ sw
                a, b = b, a
            out = place_operator(base, (a, b), m, self.dim)
            self._placed[key] = out
        return out

    def r(self) -> "PlacedRProduct":
        return PlacedRProduct(self, 2, [(1, 2, 1)])

    def unit(self, legs: int = 1) -> "PlacedRProduct":
        return PlacedRProduct(self, legs, [])


class PlacedRProduct(HopfExpr):
    def __init__(self, context: QuasitriangularContext, legs: int, factors):
        self.context = context
        self.legs = legs
        self.factors = tuple((int(a), int(b), 1 if s > 0 else -1) for a, b, s in factors)
        for a, b, _ in self.factors:
            if a == b or not (1 <= a <= legs and 1 <= b <= legs):
                raise LegOutOfRange(f"factor on legs ({a}, {b}) invalid for {legs} legs")

    def __repr__(self):
        if not self.factors:
            return f"1^⊗{self.legs}"
        return "·".join(f"R{a}{b}" + ("" if s > 0 else "^-1") for a, b, s in self.factors)

    def __eq__(self, other):
        if not isinstance(other, PlacedRProduct):
            return NotImplemented
        return self.legs == other.legs and self.factors == other.factors

    __hash__ = None

    def inflate(self, i: int) -> "PlacedRProduct":
        self._check_inflate(i)
        shift = lambda x: x + 1 if x > i else x  # noqa: E731
        if i == 0:
            return PlacedRProduct(self.context, self.legs + 1, [(a + 1, b + 1, s) for a, b, s in self.factors])
        out = []
        for a, b, s in self.factors:
            if a == i:
                pair = [(a, shift(b), s), (a + 1, shift(b), s)]
            elif b == i:
                pair = [(shift(a), b + 1, s), (shift(a), b, s)]
            else:
                out.append((shift(a), shift(b), s))
                continue
            out.extend(pair if s > 0 else pair[::-1])
        return PlacedRProduct(self.context, self.legs + 1, out)

    def counit_at(self, i: int) -> "PlacedRProduct":
        self._check_counit(i)
        down = lambda x: x - 1 if x > i else x  # noqa: E731
        kept = [(down(a), down(b), s) for a, b, s in self.factors if i not in (a, b)]
        return PlacedRProduct(self.context, self.legs - 1, kept)

    def then(self, other) -> HopfExpr:
        if isinstance(other, PlacedRProduct):
            if other.legs != self.legs:
                raise SizeMismatch(f"cannot multiply elements with {self.legs} and {other.legs} legs")
            return PlacedRProduct(self.context, self.legs, self.factors + other.factors)
        return super().then(other)

    __mul__ = then

    def inverse(self) -> "PlacedRProduct":
        return PlacedRProduct(self.context, self.legs, [(a, b, -s) for a, b, s in reversed(self.factors)])

    def expand(self, widths) -> "PlacedRProduct":
        """Rewrite so that every leg has width 1 (width 0 applies the counit)."""
        out = self
        for leg in range(self.legs, 0, -1):
            w = widths[leg - 1]
            if w == 0:
                out = out.counit_at(leg)
            else:
                for _ in range(w - 1):
                    out = out.inflate(leg)
        return out

    def _matrix(self, widths):
        flat = self.expand(widths)
        size = self.context.dim ** flat.legs
        out = Matrix.identity(size)
        for a, b, s in flat.factors:
            out = out @ self.context.placed(a, b, s, flat.legs)
        return out
