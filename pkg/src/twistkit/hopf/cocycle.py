"""Counital 2-cocycles, the higher elements f_n, and Drinfeld twists of relations."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DimensionError, ModuleAlgebraViolation
from ..exactla import Matrix
from ..quadalg import QuadraticAlgebra
from .elements import HopfExpr, WordHopfContext
from .quasitriangular import PlacedRProduct, QuasitriangularContext, flip


@dataclass
class VerificationResult:
    ok: bool
    check: str = ""
    witness: object = None
    detail: str = ""
    parts: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def act(e: HopfExpr, widths) -> Matrix:
    """Matrix of e acting on V^⊗(sum of widths), leg i acting on the i-th block."""
    return e.matrix(widths)


def inflate(e: HopfExpr, i: int) -> HopfExpr:
    return e.inflate(i)


def counit_at(e: HopfExpr, i: int) -> HopfExpr:
    return e.counit_at(i)


class Cocycle:
    """An invertible element μ of H⊗H in either backend.

    Only invertibility is enforced on construction; the cocycle and
    counit equations are left to verify_two_cocycle and verify_counital so
    that counterexamples can be built and examined.
    """

    def __init__(self, mu: HopfExpr, mu_inverse: HopfExpr | None = None, name: str = "",
                 conjugator: Matrix | None = None):
        if mu.legs != 2:
            raise DimensionError(f"a 2-cocycle has 2 legs, got {mu.legs}")
        self.mu = mu
        self.backend = "qt" if isinstance(mu, PlacedRProduct) else "word"
        self.name = name
        m = mu.matrix((1, 1))
        try:
            inv_m = m.inverse()
        except DimensionError:
            raise DimensionError("μ does not act invertibly on V⊗V") from None
        self.mu_inverse = mu.inverse() if mu_inverse is None else mu_inverse
        if self.mu_inverse.matrix((1, 1)) != inv_m:
            raise DimensionError("supplied inverse does not invert μ on V⊗V")
        # operators on V⊗V by which generator coproducts are conjugated (twisted Hopf structure)
        self.conjugator = conjugator
        self._f: dict = {}
        self._finv: dict = {}

    def __repr__(self):
        return f"Cocycle({self.name or self.mu!r})"

    @property
    def context(self):
        return self.mu.context

    @property
    def dim(self) -> int:
        return self.context.dim

    @property
    def matrix(self) -> Matrix:
        return self.mu.matrix((1, 1))

    @property
    def inverse_matrix(self) -> Matrix:
        return self.mu_inverse.matrix((1, 1))

    def unit(self, legs: int) -> HopfExpr:
        return self.context.unit(legs)

    def inverse_cocycle(self) -> "Cocycle":
        """μ⁻¹, a cocycle for the Hopf algebra twisted by μ."""
        conj = self.matrix if self.conjugator is None else self.matrix @ self.conjugator
        return Cocycle(self.mu_inverse, self.mu, f"{self.name}^-1" if self.name else "", conj)


def verify_two_cocycle(c: Cocycle) -> VerificationResult:
    """(μ⊗1)·(Δ⊗id)(μ) = (1⊗μ)·(id⊗Δ)(μ) on V^⊗3."""
    mu = c.mu
    lhs = mu.pad(0, 1).then(mu.inflate(1)).matrix((1, 1, 1))
    rhs = mu.pad(1, 0).then(mu.inflate(2)).matrix((1, 1, 1))
    j = lhs.first_difference(rhs)
    if j is None:
        return VerificationResult(True, "two-cocycle")
    return VerificationResult(False, "two-cocycle", j,
                              f"sides differ on basis vector {j} of V^⊗3")


def verify_counital(c: Cocycle) -> VerificationResult:
    """(ε⊗id)(μ) = 1 = (id⊗ε)(μ) as operators on V."""
    ident = Matrix.identity(c.dim)
    for leg in (1, 2):
        m = c.mu.counit_at(leg).matrix((1,))
        j = m.first_difference(ident)
        if j is not None:
            return VerificationResult(False, "counital", (leg, j),
                                      f"counit on leg {leg} is not the identity (basis vector {j})")
    return VerificationResult(True, "counital")


def verify_qt_axioms(ctx: QuasitriangularContext) -> VerificationResult:
    """R·R⁻¹ = id, Yang-Baxter, the cocycle identity through the rewrite rules,
    and, when the Hopf algebra is attached, τΔ(g) = RΔ(g)R⁻¹ on V⊗V."""
    parts = []
    n = ctx.dim
    parts.append(("inverse", ctx.R @ ctx.R_inverse == Matrix.identity(n * n)
                  and ctx.R_inverse @ ctx.R == Matrix.identity(n * n)))
    r = ctx.r()
    r12, r13, r23 = (PlacedRProduct(ctx, 3, [f]) for f in ((1, 2, 1), (1, 3, 1), (2, 3, 1)))
    ybe_l = r12.then(r13).then(r23).matrix()
    ybe_r = r23.then(r13).then(r12).matrix()
    parts.append(("yang-baxter", ybe_l == ybe_r))
    parts.append(("inflation rules", r.inflate(1) == r13.then(r23) and r.inflate(2) == r13.then(r12)))
    parts.append(("two-cocycle", bool(verify_two_cocycle(Cocycle(r)))))
    if ctx.hopf is not None:
        tau = flip(n)
        ok = True
        for g in ctx.hopf.generators:
            d = ctx.hopf.letter_matrix(g, 2)
            if tau @ d @ tau != ctx.R @ d @ ctx.R_inverse:
                ok = False
        parts.append(("quasi-cocommutativity", ok))
    bad = [name for name, ok in parts if not ok]
    return VerificationResult(not bad, "qt-axioms", bad[0] if bad else None,
                              "failed: " + ", ".join(bad) if bad else "", parts)


def build_f(c: Cocycle, n: int) -> HopfExpr:
    """f_0 = 1, f_1 = μ, f_n = (μ⊗1^⊗(n-1))·(Δ⊗id^⊗(n-1))(f_{n-1})."""
    if n in c._f:
        return c._f[n]
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        f = c.unit(1)
    elif n == 1:
        f = c.mu
    else:
        f = c.mu.pad(0, n - 1).then(build_f(c, n - 1).inflate(1))
    c._f[n] = f
    return f


def build_f_inverse(c: Cocycle, n: int) -> HopfExpr:
    """f_n⁻¹ = (Δ⊗id^⊗(n-1))(f_{n-1}⁻¹)·(μ⁻¹⊗1^⊗(n-1))."""
    if n in c._finv:
        return c._finv[n]
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        f = c.unit(1)
    elif n == 1:
        f = c.mu_inverse
    else:
        f = build_f_inverse(c, n - 1).inflate(1).then(c.mu_inverse.pad(0, n - 1))
    c._finv[n] = f
    return f


def _generator_operators(ctx: WordHopfContext, conjugator: Matrix | None):
    for g in ctx.generators:
        d = ctx.letter_matrix(g, 2)
        if conjugator is not None:
            d = conjugator @ d @ conjugator.inverse()
        yield g, d


def verify_module_algebra(A: QuadraticAlgebra, ctx, conjugator: Matrix | None = None,
                          cocycle: Cocycle | None = None) -> VerificationResult:
    """Check that the relation space R of A is stable under the Hopf action on V⊗V.

    For a quasitriangular context the R-matrix is only required to act
    invertibly on R; if the context carries its Hopf algebra, stability
    under that algebra is checked as well.
    """
    R = A.relations
    if isinstance(ctx, QuasitriangularContext):
        for mat, label in ((ctx.R, "R"), (ctx.R_inverse, "R^-1")):
            if R.image(mat).dim != R.dim:
                return VerificationResult(False, "module-algebra", label, f"{label} does not act invertibly on R")
        if ctx.hopf is None:
            return VerificationResult(True, "module-algebra")
        ctx = ctx.hopf
    if ctx.dim != A.dim_v:
        raise DimensionError("Hopf action and algebra disagree on dim V")
    for g, d in _generator_operators(ctx, conjugator):
        if not R.contains(R.image(d)):
            return VerificationResult(False, "module-algebra", g, f"Δ({g}) does not preserve the relations")
    return VerificationResult(True, "module-algebra")


def twist_relations(A: QuadraticAlgebra, c: Cocycle, check: bool = True) -> QuadraticAlgebra:
    """T(V)/(R_μ) with R_μ = μ▷R."""
    if check:
        res = verify_module_algebra(A, c.context, c.conjugator)
        if not res:
            raise ModuleAlgebraViolation(res.detail)
    Rmu = A.relations.image(c.matrix)
    name = f"{A.name}_μ" if A.name else ""
    return QuadraticAlgebra(A.gens, Rmu, name)
