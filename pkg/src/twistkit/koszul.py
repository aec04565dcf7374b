"""Koszul complexes of quadratic algebras, sliced by internal degree.

(K_n)_d = A_{d-n} ⊗ W_n with W_0 = k, W_1 = V and W_n the intersection of
all placements V^⊗i ⊗ R ⊗ V^⊗j, i + j = n - 2.  A basis vector is a pair
(normal word i of A_{d-n}, basis vector k of W_n) at index i·dim W_n + k.
The differential multiplies the A factor by the first tensor leg.

The twisted complex K(A_μ) is realized in the coordinates of A: same
graded pieces, relations R_μ = μ▷R and product a·_μ v = m(μ⁻¹▷(a⊗v)).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import DegreeMismatch, ImageEscape, ModuleAlgebraViolation
from .exactla import ONE, ZERO, Matrix, Subspace, kernel
from .hopf.cocycle import Cocycle, VerificationResult, build_f, build_f_inverse
from .hopf.quasitriangular import QuasitriangularContext
from .quadalg import QuadraticAlgebra


# -- helpers -------------------------------------------------------------------

def kron_vec(u: dict, v: dict, size_v: int) -> dict:
    return {i * size_v + j: x * y for i, x in u.items() for j, y in v.items()}


def kron_all(mats) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


def quotient_operator(A: QuadraticAlgebra, M: Matrix, layout, check: bool = True,
                      samples: int = 2, seed: int = 0) -> Matrix:
    """Induced map on A_{k1} ⊗ ... ⊗ A_{kr} of an operator M on V^⊗(k1+...+kr).

    The operator is applied to normal-word representatives and the result is
    reduced.  With check=True, random elements of the relation slice placed
    in each block are verified to map into the relation slices, so that the
    induced map is well defined.
    """
    layout = tuple(layout)
    comps = [A.graded_component(k) for k in layout]
    reduce = kron_all([c.reduce for c in comps]) if comps else Matrix.identity(1)
    incl = kron_all([c.inclusion() for c in comps]) if comps else Matrix.identity(1)
    if check:
        rng = random.Random(seed)
        n = A.dim_v
        for pos, k in enumerate(layout):
            if k < 2 or not comps[pos].relation_span.dim:
                continue
            rel = comps[pos].relation_span.basis.data
            for _ in range(samples):
                vec = {0: ONE}
                for other, kk in enumerate(layout):
                    width = n ** kk
                    if other == pos:
                        block: dict = {}
                        for r in rng.sample(rel, min(3, len(rel))):
                            c = rng.randint(1, 5)
                            for j, x in r.items():
                                y = block.get(j, ZERO) + x * c
                                if y:
                                    block[j] = y
                                else:
                                    block.pop(j, None)
                    else:
                        block = {rng.randrange(width): ONE * rng.randint(1, 5) for _ in range(2)}
                    vec = kron_vec(vec, block, width)
                if reduce.apply(M.apply(vec)):
                    raise ModuleAlgebraViolation(
                        f"operator does not preserve the relations in block {pos + 1} of layout {layout}")
    return reduce @ M @ incl


# -- Koszul spaces ---------------------------------------------------------------

@dataclass
class KoszulSpaces:
    dim_v: int
    relations: Subspace
    W: list = field(default_factory=list)

    def extend(self, N: int):
        n = self.dim_v
        if not self.W:
            self.W = [Subspace.full(1), Subspace.full(n)]
        while len(self.W) <= N:
            k = len(self.W)
            left = self.W[k - 1].tensor(Subspace.full(n))
            right = Subspace.full(n ** (k - 2)).tensor(self.relations)
            self.W.append(left.intersect(right))
        return self

    def dims(self) -> list[int]:
        return [w.dim for w in self.W]


def koszul_spaces(A: QuadraticAlgebra | Subspace, N: int, dim_v: int | None = None) -> KoszulSpaces:
    """W_0..W_N, each W_n = (W_{n-1} ⊗ V) ∩ (V^⊗(n-2) ⊗ R)."""
    if isinstance(A, QuadraticAlgebra):
        rel, dim_v = A.relations, A.dim_v
    else:
        rel = A
    return KoszulSpaces(dim_v, rel).extend(max(N, 1))


class KoszulComplex:
    """Degree slices of K(A) with the A factor written in A's normal words.

    relations and product default to those of A; passing R_μ and the
    twisted product gives K(A_μ) in the same coordinates.
    """

    def __init__(self, algebra: QuadraticAlgebra, relations: Subspace | None = None,
                 product=None, N: int = 4, name: str = ""):
        self.A = algebra
        self.relations = algebra.relations if relations is None else relations
        self._product = product
        self.N = N
        self.name = name or algebra.name
        self.spaces = koszul_spaces(self.relations, N + 1, algebra.dim_v)
        self._diff: dict = {}

    def __repr__(self):
        return f"KoszulComplex({self.name}, W dims {self.spaces.dims()})"

    @property
    def n_gen(self) -> int:
        return self.A.dim_v

    def W(self, n: int) -> Subspace:
        self.spaces.extend(n)
        return self.spaces.W[n]

    def product(self, k: int) -> Matrix:
        """Right multiplication A_k ⊗ V -> A_{k+1}."""
        if self._product is None:
            return self.A.multiply(k, 1)
        return self._product(k)

    def dim(self, n: int, d: int) -> int:
        if n < 0 or n > d:
            return 0
        return self.A.dim(d - n) * self.W(n).dim

    def embed(self, n: int, d: int) -> Matrix:
        """(K_n)_d -> A_{d-n} ⊗ V^⊗n."""
        a = self.A.dim(d - n)
        return Matrix.identity(a).kron(self.W(n).basis.transpose())

    def coordinates(self, n: int, d: int, m: Matrix) -> Matrix:
        """Rewrite columns in A_{d-n} ⊗ V^⊗n as columns in (K_n)_d."""
        W = self.W(n)
        size = self.n_gen ** n
        cols = []
        for j, col in enumerate(m.columns()):
            blocks: dict = {}
            for idx, x in col.items():
                i, r = divmod(idx, size)
                blocks.setdefault(i, {})[r] = x
            out = {}
            for i, vec in blocks.items():
                coords = W.coordinates(vec)
                if coords is None:
                    raise ImageEscape(f"column {j} leaves A_{d - n} ⊗ W_{n} in block {i}")
                for k, x in enumerate(coords):
                    if x:
                        out[i * W.dim + k] = x
            cols.append(out)
        return Matrix.from_columns(self.dim(n, d), cols)

    def differential(self, n: int, d: int) -> Matrix:
        """d_n : (K_n)_d -> (K_{n-1})_d, b ⊗ v ⊗ w ↦ bv ⊗ w."""
        if n < 1:
            raise DegreeMismatch("the differential starts at homological degree 1")
        key = (n, d)
        if key in self._diff:
            return self._diff[key]
        if n > d:
            m = Matrix.zeros(self.dim(n - 1, d), 0)
            self._diff[key] = m
            return m
        nv = self.n_gen
        Wn, Wm = self.W(n), self.W(n - 1)
        # split each w_k by its first letter; the rest lies in W_{n-1}
        rest_size = nv ** (n - 1)
        pieces = []
        for k, row in enumerate(Wn.basis.data):
            split: dict = {}
            for idx, x in row.items():
                a, r = divmod(idx, rest_size)
                split.setdefault(a, {})[r] = x
            coords = {}
            for a, vec in split.items():
                c = Wm.coordinates(vec)
                if c is None:
                    raise ImageEscape(f"W_{n} is not inside V ⊗ W_{n - 1}")
                coords[a] = c
            pieces.append(coords)
        P = self.product(d - n)
        Pcols = P.columns()
        rows_dim = self.dim(n - 1, d)
        cols = []
        for i in range(self.A.dim(d - n)):
            for k in range(Wn.dim):
                out: dict = {}
                for a, coords in pieces[k].items():
                    for j, x in Pcols[i * nv + a].items():
                        for kk, y in enumerate(coords):
                            if y:
                                key2 = j * Wm.dim + kk
                                z = out.get(key2, ZERO) + x * y
                                if z:
                                    out[key2] = z
                                else:
                                    out.pop(key2, None)
                cols.append(out)
        m = Matrix.from_columns(rows_dim, cols)
        self._diff[key] = m
        return m

    def differential_blocks(self, n: int, d: int) -> list[Matrix]:
        """The bar-complex alternating sum restricted to (K_n)_d, block by block.

        Block 0 is b⊗a_1⊗...⊗a_n ↦ ba_1⊗a_2⊗...; block i (1 ≤ i < n) is
        (-1)^i times the product of legs i, i+1 into A_2; the last block is
        (-1)^n ε'(a_n) on the final leg.  Each is expressed in the ambient
        tensor space of its target.
        """
        if not 1 <= n <= d:
            raise DegreeMismatch(f"need 1 <= n <= d, got n={n}, d={d}")
        nv = self.n_gen
        a = self.A.dim(d - n)
        src = self.embed(n, d)
        blocks = []
        first = self.product(d - n).kron(Matrix.identity(nv ** (n - 1)))
        blocks.append(first @ src)
        m2 = self.product(1)
        for i in range(1, n):
            op = kron_all([Matrix.identity(a * nv ** (i - 1)), m2, Matrix.identity(nv ** (n - i - 1))])
            blocks.append((op @ src).scale((-1) ** i))
        eps = Matrix.zeros(1, nv)
        op = kron_all([Matrix.identity(a * nv ** (n - 1)), eps])
        blocks.append((op @ src).scale((-1) ** n))
        return blocks

    def verify_differential_agreement(self, n: int, d: int) -> VerificationResult:
        blocks = self.differential_blocks(n, d)
        single = self.embed(n - 1, d) @ self.differential(n, d)
        if blocks[0] != single:
            return VerificationResult(False, "differential-agreement", (n, d, 0))
        for i, b in enumerate(blocks[1:], start=1):
            if not b.is_zero():
                return VerificationResult(False, "differential-agreement", (n, d, i))
        return VerificationResult(True, "differential-agreement")


# -- twisted structures -------------------------------------------------------

class TwistedKoszul:
    """K(A) and K(A_μ) side by side, with the maps F_n = f_n▷ between them."""

    def __init__(self, A: QuadraticAlgebra, c: Cocycle, N: int = 4, check: bool = True):
        self.A = A
        self.c = c
        self.N = N
        self.check = check
        self.source = KoszulComplex(A, N=N)
        self.relations_mu = A.relations.image(c.matrix)
        self.target = KoszulComplex(A, self.relations_mu, self.twisted_product, N=N,
                                    name=f"{A.name}_μ" if A.name else "")
        self._tp: dict = {}
        self._F: dict = {}
        self._Finv: dict = {}

    def twisted_product(self, k: int) -> Matrix:
        """a ⊗ v ↦ m(μ⁻¹▷(a⊗v)) for a in A_k, v in V."""
        if k not in self._tp:
            M = self.c.mu_inverse.matrix((k, 1))
            self._tp[k] = self.A.multiply(k, 1) @ quotient_operator(self.A, M, (k, 1), self.check)
        return self._tp[k]

    def _f_on_slice(self, elem, n: int, d: int, src: KoszulComplex, dst: KoszulComplex) -> Matrix:
        layout = (d - n,) + (1,) * n
        Q = quotient_operator(self.A, elem.matrix(layout), layout, self.check)
        return dst.coordinates(n, d, Q @ src.embed(n, d))

    def F(self, n: int, d: int) -> Matrix:
        if (n, d) not in self._F:
            self._F[(n, d)] = self._f_on_slice(build_f(self.c, n), n, d, self.source, self.target)
        return self._F[(n, d)]

    def F_inverse(self, n: int, d: int) -> Matrix:
        if (n, d) not in self._Finv:
            self._Finv[(n, d)] = self._f_on_slice(build_f_inverse(self.c, n), n, d, self.target, self.source)
        return self._Finv[(n, d)]


@dataclass
class ChainMapSlice:
    n: int
    d: int
    F: Matrix
    F_inverse: Matrix

    def invertible(self) -> bool:
        k = self.F.cols
        return self.F_inverse @ self.F == Matrix.identity(k) and self.F @ self.F_inverse == Matrix.identity(k)


def chain_map(A: QuadraticAlgebra, c: Cocycle, n: int, d: int, twisted: TwistedKoszul | None = None) -> ChainMapSlice:
    tw = twisted or TwistedKoszul(A, c, N=max(n, 1))
    return ChainMapSlice(n, d, tw.F(n, d), tw.F_inverse(n, d))


@dataclass
class GridReport:
    check: str
    N: int
    D: int
    entries: dict = field(default_factory=dict)  # (n, d) -> value
    failures: list = field(default_factory=list)  # (n, d, witness)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def verify_chain_commutes(A: QuadraticAlgebra, c: Cocycle, N: int = 4, D: int = 6,
                          twisted: TwistedKoszul | None = None, inverse: bool = False) -> GridReport:
    """d^μ_n·F_n = F_{n-1}·d_n for 1 <= n <= N, n <= d <= D (or the same for F⁻¹)."""
    tw = twisted or TwistedKoszul(A, c, N)
    rep = GridReport("chain-inverse" if inverse else "chain-commutes", N, D)
    for d in range(1, D + 1):
        for n in range(1, min(N, d) + 1):
            if inverse:
                lhs = tw.source.differential(n, d) @ tw.F_inverse(n, d)
                rhs = tw.F_inverse(n - 1, d) @ tw.target.differential(n, d)
            else:
                lhs = tw.target.differential(n, d) @ tw.F(n, d)
                rhs = tw.F(n - 1, d) @ tw.source.differential(n, d)
            j = lhs.first_difference(rhs)
            rep.entries[(n, d)] = j is None
            if j is not None:
                rep.failures.append((n, d, j))
    return rep


def twisted_action(A: QuadraticAlgebra, c: Cocycle, n: int, d: int,
                   complex: KoszulComplex | None = None, check: bool = True) -> Matrix:
    """v ⊗ m ↦ v ▷_μ m = m(μ⁻¹▷(v⊗m)) on V ⊗ (K_n)_d -> (K_n)_{d+1}.

    μ⁻¹ acts with its second leg spread over K_n = A_{d-n} ⊗ V^⊗n through
    the iterated coproduct; the result is then multiplied on the left.
    """
    K = complex or KoszulComplex(A, N=max(n, 1))
    if n > d:
        return Matrix.zeros(K.dim(n, d + 1), A.dim_v * K.dim(n, d))
    elem = c.mu_inverse
    for _ in range(n):
        elem = elem.inflate(2)
    layout = (1, d - n) + (1,) * n
    Q = quotient_operator(A, elem.matrix(layout), layout, check)
    return _left_multiply_then_coords(A, K, n, d, Q)


def _left_multiply_then_coords(A, K, n, d, Q: Matrix) -> Matrix:
    nv = A.dim_v
    src = Matrix.identity(nv).kron(K.embed(n, d))
    mult = A.multiply(1, d - n).kron(Matrix.identity(nv ** n))
    return K.coordinates(n, d + 1, mult @ Q @ src)


def verify_smash(A: QuadraticAlgebra, ctx, n: int, d: int) -> VerificationResult:
    """h▷(a▷m) = (h_(1)▷a)▷(h_(2)▷m) for generators h, a in V, m in (K_n)_d.

    Both sides are compared in A_{d+1-n} ⊗ V^⊗n.  Well-definedness on the
    quotient is not asserted here, so broken coproducts give False rather
    than an exception.
    """
    if isinstance(ctx, QuasitriangularContext):
        if ctx.hopf is None:
            raise TypeError("verify_smash needs explicit coproducts of generators")
        ctx = ctx.hopf
    if n > d:
        return VerificationResult(True, "smash")
    K = KoszulComplex(A, N=max(n, 1))
    nv = A.dim_v
    src = Matrix.identity(nv).kron(K.embed(n, d))
    mult = A.multiply(1, d - n).kron(Matrix.identity(nv ** n))
    for g in ctx.generators:
        e = ctx.gen(g)
        lhs_elem = e
        for _ in range(n):
            lhs_elem = lhs_elem.inflate(1)
        lay_l = (d + 1 - n,) + (1,) * n
        lhs = quotient_operator(A, lhs_elem.matrix(lay_l), lay_l, check=False) @ mult @ src
        rhs_elem = e.inflate(1)
        for _ in range(n):
            rhs_elem = rhs_elem.inflate(2)
        lay_r = (1, d - n) + (1,) * n
        rhs = mult @ quotient_operator(A, rhs_elem.matrix(lay_r), lay_r, check=False) @ src
        j = lhs.first_difference(rhs)
        if j is not None:
            return VerificationResult(False, "smash", (g, j), f"generator {g} fails on basis vector {j}")
    return VerificationResult(True, "smash")


# -- exactness ---------------------------------------------------------------------

@dataclass
class ExactnessReport:
    N: int
    D: int
    homology: dict = field(default_factory=dict)  # (n, d) -> dim ker d_n - rank d_{n+1}
    ranks: dict = field(default_factory=dict)
    square_zero: bool = True

    @property
    def exact(self) -> bool:
        return self.square_zero and all(v == 0 for v in self.homology.values())

    def __bool__(self):
        return self.exact

    def nonzero(self) -> list:
        return [(k, v) for k, v in sorted(self.homology.items()) if v]

    def table(self) -> list[list[int]]:
        return [[self.homology.get((n, d), 0) for d in range(1, self.D + 1)] for n in range(self.N + 1)]


def exactness_report(X, N: int = 4, D: int = 6, corrupt=None) -> ExactnessReport:
    """Homology dimensions of the Koszul complex in slices 0 <= n <= N, 1 <= d <= D.

    The entry at (n, d) is dim ker d_n - dim(ker d_n ∩ im d_{n+1}), which is
    the usual ker - rank whenever d_n d_{n+1} = 0.

    X is a QuadraticAlgebra or a KoszulComplex.  corrupt = (n, d, row, col)
    adds one to a single entry of d_n in degree d, as a negative control.
    """
    K = X if isinstance(X, KoszulComplex) else KoszulComplex(X, N=N)
    rep = ExactnessReport(N, D)

    def diff(n, d):
        m = K.differential(n, d)
        if corrupt is not None and corrupt[:2] == (n, d):
            _, _, r, col = corrupt
            m = Matrix(m.rows, m.cols, [dict(row) for row in m.data])
            x = m.data[r].get(col, ZERO) + ONE
            if x:
                m.data[r][col] = x
            else:
                m.data[r].pop(col, None)
        return m

    for d in range(1, D + 1):
        top = min(N + 1, d)
        mats = {n: diff(n, d) for n in range(1, top + 1)}
        broken = set()
        for n, m in mats.items():
            rep.ranks[(n, d)] = m.rank()
            if n + 1 in mats and not (m @ mats[n + 1]).is_zero():
                rep.square_zero = False
                broken.add(n)
        for n in range(0, min(N, d) + 1):
            if n == 0:
                ker = K.dim(0, d)  # the augmentation vanishes in positive degree
            else:
                ker = K.dim(n, d) - rep.ranks[(n, d)]
            if n in broken:
                # im d_{n+1} is not inside ker d_n; count only the part that is
                img = kernel(mats[n]).intersect(Subspace.span(K.dim(n, d), mats[n + 1].transpose())).dim
            else:
                img = rep.ranks.get((n + 1, d), 0)
            rep.homology[(n, d)] = ker - img
    return rep


def numerical_koszul_test(A: QuadraticAlgebra, D: int = 6) -> VerificationResult:
    """Σ_i (-1)^i dim(A^!)_i · dim A_{d-i} = 0 for 1 <= d <= D."""
    h = A.hilbert_series(D)
    h_dual = A.quadratic_dual().hilbert_series(D)
    for d in range(1, D + 1):
        total = sum((-1) ** i * h_dual[i] * h[d - i] for i in range(d + 1))
        if total:
            return VerificationResult(False, "numerical-koszul", d, f"degree {d} sum is {total}")
    return VerificationResult(True, "numerical-koszul")
