"""Concrete Hopf actions: the group algebra of (C_2)^n and U_q(sl_2) on its 2-dim module.

Conventions for U_q(sl_2), with V = span{x, y}:

    E▷x = 0, E▷y = x,  F▷x = y, F▷y = 0,  K^{±1}▷x = q^{±1}x,  K^{±1}▷y = q^{∓1}y.

Two coproducts appear.  The standard one

    Δ(E) = 1⊗E + E⊗K,   Δ(F) = K⁻¹⊗F + F⊗1,   Δ(K) = K⊗K

preserves the relation xy - q⁻¹yx, while the q-plane xy - q·yx is a module
algebra for its opposite

    Δ'(E) = K⊗E + E⊗1,  Δ'(F) = 1⊗F + F⊗K⁻¹.

The R-matrix used for the twist is R = q^{H⊗H/2}(1 + (q - q⁻¹)F⊗E), a
quasitriangular structure for Δ' (so τΔ'(h) = RΔ'(h)R⁻¹).  On V⊗V in the
basis (xx, xy, yx, yy) it acts by

    R▷x⊗x = q^{1/2} x⊗x,               R▷y⊗y = q^{1/2} y⊗y,
    R▷x⊗y = q^{-1/2}(x⊗y + (q - q⁻¹) y⊗x),   R▷y⊗x = q^{-1/2} y⊗x.

Twisting by R turns Δ' into τΔ' = Δ, so the twisted algebra, the
q⁻¹-plane, is a module algebra for the standard coproduct; this is where
E▷x^a y^b = [b]_q x^{a+1} y^{b-1} holds.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce

from ..errors import DegreeBoundExceeded, InvalidWord
from ..exactla import ONE, Matrix, Scalar, qnumber
from ..quadalg import QuadraticAlgebra, quantum_plane, word_index
from .cocycle import Cocycle, twist_relations
from .elements import HopfElement, WordHopfContext
from .quasitriangular import QuasitriangularContext

HALF = Scalar(Fraction(1, 2))


# -- (C_2)^n ------------------------------------------------------------------

def c2n_context(n: int, coproduct_override: dict | None = None) -> WordHopfContext:
    """Group algebra of (C_2)^n with t_i▷x_j = (-1)^{δ_ij} x_j, t grouplike, ε(t) = 1."""
    gens = [f"t{i + 1}" for i in range(n)]
    action = {g: Matrix.diagonal([-1 if j == i else 1 for j in range(n)]) for i, g in enumerate(gens)}
    coproduct = {g: [(ONE, (g,), (g,))] for g in gens}
    if coproduct_override:
        coproduct.update(coproduct_override)
    counit = {g: ONE for g in gens}
    return WordHopfContext(n, action, coproduct, counit, f"C2^{n}")


def mu_ij(ctx: WordHopfContext, i: int, j: int) -> HopfElement:
    """½(1⊗1 + t_i⊗1 + 1⊗t_j − t_i⊗t_j)."""
    ti, tj = f"t{i}", f"t{j}"
    return ctx.element([(HALF, ((), ())), (HALF, ((ti,), ())), (HALF, ((), (tj,))), (-HALF, ((ti,), (tj,)))])


def c2n_cocycle(n: int, ctx: WordHopfContext | None = None) -> Cocycle:
    """μ = Π_{j<i} μ_ij, an involution, so μ⁻¹ is the same product reversed."""
    ctx = ctx or c2n_context(n)
    factors = [mu_ij(ctx, i, j) for i in range(1, n + 1) for j in range(1, i)]
    mu = reduce(lambda a, b: a * b, factors, ctx.unit(2))
    mu_inv = reduce(lambda a, b: a * b, reversed(factors), ctx.unit(2))
    return Cocycle(mu, mu_inv, f"prod mu_ij (n={n})")


# -- U_q(sl_2) ----------------------------------------------------------------

def _uq_actions():
    q = Scalar.q(1)
    return {
        "E": Matrix.from_dense([[0, 1], [0, 0]]),
        "F": Matrix.from_dense([[0, 0], [1, 0]]),
        "K": Matrix.diagonal([q, q.inverse()]),
        "Ki": Matrix.diagonal([q.inverse(), q]),
    }


_UNIT_COUNIT = {"E": 0, "F": 0, "K": 1, "Ki": 1}


def uq_sl2_context() -> WordHopfContext:
    """U_q(sl_2) with Δ(E) = 1⊗E + E⊗K, Δ(F) = K⁻¹⊗F + F⊗1 (generator Ki is K⁻¹)."""
    coproduct = {
        "E": [(1, (), ("E",)), (1, ("E",), ("K",))],
        "F": [(1, ("Ki",), ("F",)), (1, ("F",), ())],
        "K": [(1, ("K",), ("K",))],
        "Ki": [(1, ("Ki",), ("Ki",))],
    }
    return WordHopfContext(2, _uq_actions(), coproduct, dict(_UNIT_COUNIT), "U_q(sl2)")


def uq_sl2_opposite_context() -> WordHopfContext:
    """U_q(sl_2) with the opposite coproduct Δ'(E) = K⊗E + E⊗1, Δ'(F) = 1⊗F + F⊗K⁻¹."""
    coproduct = {
        "E": [(1, ("K",), ("E",)), (1, ("E",), ())],
        "F": [(1, (), ("F",)), (1, ("F",), ("Ki",))],
        "K": [(1, ("K",), ("K",))],
        "Ki": [(1, ("Ki",), ("Ki",))],
    }
    return WordHopfContext(2, _uq_actions(), coproduct, dict(_UNIT_COUNIT), "U_q(sl2)^cop")


def qplane_r_matrix() -> Matrix:
    """R on V⊗V in the basis (xx, xy, yx, yy); columns are images of basis vectors."""
    s = Scalar.s(1)
    si = s.inverse()
    q = Scalar.q(1)
    return Matrix.from_columns(4, [
        {0: s},
        {1: si, 2: si * (q - q.inverse())},
        {2: si},
        {3: s},
    ])


def r_matrix_oracle(order: str = "FE") -> Matrix:
    """q^{H⊗H/2}(1⊗1 + (q−q⁻¹)X⊗Y) on V⊗V from the 2-dim representation.

    order "FE" takes X⊗Y = F⊗E and "EF" takes E⊗F.  Only the first matches
    the stated actions on x⊗y and y⊗x.
    """
    acts = _uq_actions()
    q = Scalar.q(1)
    X, Y = (acts["F"], acts["E"]) if order == "FE" else (acts["E"], acts["F"])
    nil = Matrix.identity(4) + X.kron(Y).scale(q - q.inverse())
    # H has eigenvalues +1 on x, -1 on y, so q^{H⊗H/2} is diagonal with q^{±1/2}
    h = [1, -1]
    diag = Matrix.diagonal([Scalar.s(h[a] * h[b]) for a in range(2) for b in range(2)])
    return diag @ nil


def qplane_qt_context(with_hopf: bool = True) -> QuasitriangularContext:
    hopf = uq_sl2_opposite_context() if with_hopf else None
    return QuasitriangularContext(2, qplane_r_matrix(), hopf=hopf, name="U_q(sl2) R-matrix")


def qplane_cocycle(ctx: QuasitriangularContext | None = None) -> Cocycle:
    ctx = ctx or qplane_qt_context()
    return Cocycle(ctx.r(), name="R")


def qplane_twisted() -> QuadraticAlgebra:
    """The twist of the q-plane by R (the q⁻¹-plane)."""
    return twist_relations(quantum_plane(Scalar.q(1)), qplane_cocycle())


_TWISTED = {}


def uq_sl2_action(generator: str, a: int, b: int, degree_bound: int = 6, power: int = 1) -> dict:
    """generator^power ▷ x^a y^b in the twisted q-plane, as normal-form coordinates.

    The action is computed through the iterated coproduct on the tensor
    representative and reduced in the algebra.
    """
    if a + b > degree_bound:
        raise DegreeBoundExceeded(f"degree {a + b} exceeds bound {degree_bound}")
    if "ctx" not in _TWISTED:
        _TWISTED["ctx"] = uq_sl2_context()
        _TWISTED["alg"] = qplane_twisted()
    ctx, alg = _TWISTED["ctx"], _TWISTED["alg"]
    if generator not in ctx.action:
        raise InvalidWord(f"unknown generator {generator!r}")
    d = a + b
    comp = alg.graded_component(d)
    vec = comp.reduce.column(word_index([0] * a + [1] * b, 2))
    op = comp.reduce @ ctx.letter_matrix(generator, d) @ comp.inclusion() if d else \
        Matrix.identity(1, ctx.counit[generator])
    for _ in range(power):
        vec = op.apply(vec)
    return vec


def monomial(a: int, b: int) -> dict:
    """x^a y^b in the twisted q-plane, as normal-form coordinates."""
    if "alg" not in _TWISTED:
        uq_sl2_action("K", 0, 0)
    return _TWISTED["alg"].reduce_word([0] * a + [1] * b)


def expected_e_action(a: int, b: int) -> dict:
    """[b]_q x^{a+1} y^{b-1} (zero when b = 0)."""
    if b == 0:
        return {}
    return {i: x * qnumber(b) for i, x in monomial(a + 1, b - 1).items()}
