"""Quadratic algebras T(V)/(R) with graded components and normal forms.

Words of length d in the generators index the standard basis of V^⊗d by
base-dim(V) positional encoding, the first letter being most significant,
so the basis order is lexicographic.  A graded component A_d is modelled by
its normal words (the words that are not the leading word of any element
of the degree-d slice of the ideal) and a reduction matrix V^⊗d -> A_d.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooSmall, LegOutOfRange, LetterOutOfRange, SizeMismatch
from .exactla import ONE, ZERO, Matrix, Subspace


@dataclass(frozen=True)
class GeneratorBasis:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise ValueError("need at least one generator")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        object.__setattr__(self, "names", names)

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name) -> int:
        return self.names.index(name)

    def word_name(self, letters, sep="") -> str:
        return sep.join(self.names[a] for a in letters) if letters else "1"


def word_index(letters, dim: int) -> int:
    idx = 0
    for a in letters:
        if not 0 <= a < dim:
            raise LetterOutOfRange(f"letter {a} not in range(0, {dim})")
        idx = idx * dim + a
    return idx


def word_letters(idx: int, d: int, dim: int) -> tuple:
    out = [0] * d
    for k in range(d - 1, -1, -1):
        idx, out[k] = divmod(idx, dim)
    return tuple(out)


def place_operator(op: Matrix, legs, m: int, dim: int) -> Matrix:
    """Act by op on tensor legs `legs` (1-based, increasing) of V^⊗m."""
    legs = tuple(legs)
    k = len(legs)
    if any(b <= a for a, b in zip(legs, legs[1:])) or (legs and (legs[0] < 1 or legs[-1] > m)):
        raise LegOutOfRange(f"legs {legs} invalid for {m} tensor factors")
    if op.rows != dim ** k or op.cols != dim ** k:
        raise SizeMismatch(f"operator of shape {op.shape} does not act on V^⊗{k}")
    if not legs:
        return Matrix.identity(dim ** m, op[0, 0])
    if legs == tuple(range(legs[0], legs[0] + k)):
        start = legs[0] - 1
        out = Matrix.identity(dim ** start).kron(op)
        return out.kron(Matrix.identity(dim ** (m - start - k)))
    cols = op.columns()
    n = dim ** m
    out_cols = []
    for idx in range(n):
        digits = list(word_letters(idx, m, dim))
        sub = word_index([digits[leg - 1] for leg in legs], dim)
        col = {}
        for r, x in cols[sub].items():
            for leg, digit in zip(legs, word_letters(r, k, dim)):
                digits[leg - 1] = digit
            col[word_index(digits, dim)] = x
        out_cols.append(col)
    return Matrix.from_columns(n, out_cols)


@dataclass
class GradedComponent:
    degree: int
    normal_words: list
    reduce: Matrix  # dim A_d x dim(V)^d
    relation_span: Subspace

    @property
    def dim(self) -> int:
        return len(self.normal_words)

    def inclusion(self) -> Matrix:
        """Matrix A_d -> V^⊗d sending each normal word to itself."""
        return Matrix.from_columns(self.reduce.cols, [{w: ONE} for w in self.normal_words])


class QuadraticAlgebra:
    """T(V)/(R) for a relation subspace R of V⊗V."""

    def __init__(self, gens, relations: Subspace, name: str = ""):
        if not isinstance(gens, GeneratorBasis):
            gens = GeneratorBasis(tuple(gens))
        if relations.ambient_dim != gens.dim ** 2:
            raise SizeMismatch("relations must live in V⊗V")
        self.gens = gens
        self.relations = relations
        self.name = name
        self._components: dict[int, GradedComponent] = {}
        self._products: dict[tuple, Matrix] = {}

    @classmethod
    def from_vectors(cls, names, vectors, name: str = "") -> "QuadraticAlgebra":
        n = len(names)
        return cls(GeneratorBasis(tuple(names)), Subspace.span(n * n, vectors), name)

    @property
    def dim_v(self) -> int:
        return self.gens.dim

    def __repr__(self):
        return f"QuadraticAlgebra({self.name or ','.join(self.gens.names)}, dim R={self.relations.dim})"

    def graded_component(self, d: int) -> GradedComponent:
        comp = self._components.get(d)
        if comp is None:
            comp = self._build_component(d)
            self._components[d] = comp
        return comp

    def _build_component(self, d: int) -> GradedComponent:
        n = self.dim_v
        if d <= 1:
            size = n ** d
            return GradedComponent(d, list(range(size)), Matrix.identity(size), Subspace.zero(size))
        prev = self.graded_component(d - 1)
        prev2 = self.graded_component(d - 2)
        # A_d = (A_{d-1} ⊗ V) / image of A_{d-2} ⊗ R; candidate (i, b) <-> word prev.normal_words[i]·b
        ncand = prev.dim * n
        prev_cols = prev.reduce.columns()
        gens = []
        for w in prev2.normal_words:
            for r in self.relations.basis.data:
                vec: dict = {}
                for ab, c in r.items():
                    a, b = divmod(ab, n)
                    for i, x in prev_cols[w * n + a].items():
                        key = i * n + b
                        y = vec.get(key, ZERO) + c * x
                        if y:
                            vec[key] = y
                        else:
                            vec.pop(key, None)
                if vec:
                    gens.append(vec)
        image = Subspace.span(ncand, gens)
        pivset = set(image.pivots)
        free = [k for k in range(ncand) if k not in pivset]
        position = {k: t for t, k in enumerate(free)}
        # reduction of candidates onto the free ones
        cand_red = [None] * ncand
        for k in free:
            cand_red[k] = {position[k]: ONE}
        for row, p in zip(image.basis.data, image.pivots):
            cand_red[p] = {position[j]: -x for j, x in row.items() if j != p}
        normal = [prev.normal_words[k // n] * n + k % n for k in free]
        # reduce each word W = W'·b through A_{d-1} ⊗ V
        cols = []
        for big in range(n ** d):
            wp, b = divmod(big, n)
            col: dict = {}
            for i, x in prev_cols[wp].items():
                for t, y in cand_red[i * n + b].items():
                    z = col.get(t, ZERO) + x * y
                    if z:
                        col[t] = z
                    else:
                        col.pop(t, None)
            cols.append(col)
        reduce = Matrix.from_columns(len(free), cols)
        # rows e_W - reduce(W) for non-normal W form the RREF basis of the ideal slice
        normal_set = set(normal)
        rows, piv = [], []
        for big in range(n ** d):
            if big in normal_set:
                continue
            row = {normal[t]: -x for t, x in cols[big].items()}
            row[big] = ONE
            rows.append(row)
            piv.append(big)
        span = Subspace(n ** d, Matrix.from_rows(n ** d, rows), piv, _checked=True)
        return GradedComponent(d, normal, reduce, span)

    def relation_span(self, d: int) -> Subspace:
        """The degree-d slice of the two-sided ideal generated by R."""
        if d < 2:
            raise DegreeTooSmall(f"relation span needs degree >= 2, got {d}")
        return self.graded_component(d).relation_span

    def dim(self, d: int) -> int:
        return self.graded_component(d).dim

    def hilbert_series(self, D: int) -> list[int]:
        return [self.dim(d) for d in range(D + 1)]

    def multiply(self, a: int, b: int) -> Matrix:
        """The product A_a ⊗ A_b -> A_{a+b} in normal-word coordinates."""
        key = (a, b)
        m = self._products.get(key)
        if m is None:
            ca, cb, cab = self.graded_component(a), self.graded_component(b), self.graded_component(a + b)
            shift = self.dim_v ** b
            red_cols = cab.reduce.columns()
            cols = [red_cols[u * shift + v] for u in ca.normal_words for v in cb.normal_words]
            m = Matrix.from_columns(cab.dim, cols)
            self._products[key] = m
        return m

    def reduce_word(self, letters) -> dict:
        d = len(letters)
        return self.graded_component(d).reduce.column(word_index(letters, self.dim_v))

    def quadratic_dual(self) -> "QuadraticAlgebra":
        names = tuple(f"{x}*" for x in self.gens.names)
        return QuadraticAlgebra(GeneratorBasis(names), self.relations.annihilator(),
                                f"{self.name}!" if self.name else "")

    def with_relations(self, relations: Subspace, name: str = "") -> "QuadraticAlgebra":
        return QuadraticAlgebra(self.gens, relations, name)


# -- standard examples ---------------------------------------------------------

def _names(n: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(n))


def tensor_algebra(n: int) -> QuadraticAlgebra:
    return QuadraticAlgebra(GeneratorBasis(_names(n)), Subspace.zero(n * n), "T(V)")


def symmetric_algebra(n: int, sign: int = 1) -> QuadraticAlgebra:
    """Relations x_i x_j - sign·x_j x_i for i < j (sign=-1 gives S_{-1}(V))."""
    vecs = []
    for i in range(n):
        for j in range(i + 1, n):
            vecs.append({i * n + j: ONE, j * n + i: ONE * (-sign)})
    return QuadraticAlgebra.from_vectors(_names(n), vecs, "S(V)" if sign == 1 else "S_-1(V)")


def exterior_algebra(n: int, sign: int = 1) -> QuadraticAlgebra:
    """Relations x_i x_i and x_i x_j + sign·x_j x_i (sign=-1 gives ⋀_{-1}(V))."""
    vecs = [{i * n + i: ONE} for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            vecs.append({i * n + j: ONE, j * n + i: ONE * sign})
    return QuadraticAlgebra.from_vectors(_names(n), vecs, "Λ(V)" if sign == 1 else "Λ_-1(V)")


def quantum_plane(qval) -> QuadraticAlgebra:
    """k<x,y>/(xy - qval·yx)."""
    return QuadraticAlgebra.from_vectors(("x", "y"), [{1: ONE, 2: -qval}], "quantum plane")
