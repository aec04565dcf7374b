import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import placements, sym_rank
from twistkit.errors import DegreeMismatch, ImageEscape
from twistkit.exactla import ONE, Matrix, Scalar, Subspace, kernel
from twistkit.hopf import (Cocycle, WordHopfContext, c2n_cocycle, c2n_context, qplane_cocycle,
                           qplane_qt_context, twist_relations)
from twistkit.koszul import (KoszulComplex, TwistedKoszul, chain_map, exactness_report, koszul_spaces,
                             numerical_koszul_test, twisted_action, verify_chain_commutes, verify_smash)
from twistkit.quadalg import (QuadraticAlgebra, exterior_algebra, quantum_plane, symmetric_algebra,
                              tensor_algebra)

q = Scalar.q(1)


def problems():
    return {
        "qplane": (quantum_plane(q), qplane_cocycle()),
        "sym2": (symmetric_algebra(2), c2n_cocycle(2)),
        "sym3": (symmetric_algebra(3), c2n_cocycle(3)),
        "ext2": (exterior_algebra(2), c2n_cocycle(2)),
        "ext3": (exterior_algebra(3), c2n_cocycle(3)),
    }


# a quadratic algebra that is not Koszul: A_3 = 0 and (A^!)_3 = 0 with dims 1, 2, 2,
# so H_A(t) H_{A^!}(-t) = (1 + 2t + 2t^2)(1 - 2t + 2t^2) = 1 + 4t^4
NON_KOSZUL = QuadraticAlgebra.from_vectors(("x", "y"), [{3: ONE, 1: -ONE}, {3: ONE, 0: ONE}])


# -- Koszul spaces ---------------------------------------------------------------

def test_koszul_space_examples():
    assert koszul_spaces(tensor_algebra(2), 4).dims() == [1, 2, 0, 0, 0]
    assert koszul_spaces(quantum_plane(q), 4).dims() == [1, 2, 1, 0, 0]
    assert koszul_spaces(symmetric_algebra(3), 4).dims() == [1, 3, 3, 1, 0]
    assert koszul_spaces(exterior_algebra(3), 5).dims() == [1, 3, 6, 10, 15, 21]


def _literal_W(A, n):
    """∩_{i+j=n-2} V^⊗i ⊗ R ⊗ V^⊗j, one placement at a time."""
    nv = A.dim_v
    out = Subspace.full(nv ** n)
    for i in range(n - 1):
        j = n - 2 - i
        vecs = [{(left * nv * nv + k) * nv ** j + right: c for k, c in r.items()}
                for left in range(nv ** i) for right in range(nv ** j) for r in A.relations.vectors()]
        out = out.intersect(Subspace.span(nv ** n, vecs))
    return out


@pytest.mark.parametrize("name", list(problems()))
def test_W_matches_literal_intersection(name):
    A, _ = problems()[name]
    spaces = koszul_spaces(A, 4)
    nv = A.dim_v
    for n in range(2, 5):
        assert spaces.W[n] == _literal_W(A, n)
        assert spaces.W[n - 1].tensor(Subspace.full(nv)).contains(spaces.W[n])
        assert Subspace.full(nv).tensor(spaces.W[n - 1]).contains(spaces.W[n])


# -- differentials ---------------------------------------------------------------

def test_differential_examples():
    A = quantum_plane(q)
    K = KoszulComplex(A)
    for d in range(1, 4):
        assert K.differential(1, d) == A.multiply(d - 1, 1)
    assert K.differential(1, 1) == Matrix.identity(2)
    d2 = K.differential(2, 2)
    # the relation x⊗y - q·y⊗x in k⊗R maps to itself in A_1⊗V
    assert K.embed(1, 2) @ d2 == K.W(2).basis.transpose()
    assert (K.differential(1, 2) @ d2).is_zero()
    with pytest.raises(DegreeMismatch):
        K.differential(0, 2)


@pytest.mark.parametrize("name", list(problems()))
def test_square_zero_and_agreement(name):
    A, c = problems()[name]
    tk = TwistedKoszul(A, c, N=4)
    for K in (tk.source, tk.target):
        for d in range(1, 7):
            for n in range(1, min(4, d) + 1):
                assert K.verify_differential_agreement(n, d)
                if n >= 2:
                    assert (K.differential(n - 1, d) @ K.differential(n, d)).is_zero()


# -- chain maps --------------------------------------------------------------------

def test_chain_map_examples():
    A, c = problems()["qplane"]
    tk = TwistedKoszul(A, c, N=3)
    for d in range(0, 4):
        assert tk.F(0, d) == Matrix.identity(A.dim(d))
    assert tk.F(1, 2) == c.matrix
    assert tk.F(1, 1) == Matrix.identity(2)
    f22 = tk.F(2, 2)
    assert f22.shape == (1, 1) and f22[0, 0]
    image = tk.target.embed(2, 2) @ f22
    assert Subspace.span(4, image.transpose()) == Subspace.span(4, [{1: ONE, 2: -q.inverse()}])
    slc = chain_map(A, c, 2, 3, tk)
    assert slc.invertible()


def test_chain_map_with_unit_cocycle_is_identity():
    A = symmetric_algebra(2)
    c = Cocycle(c2n_context(2).unit(2))
    tk = TwistedKoszul(A, c, N=3)
    for d in range(1, 5):
        for n in range(0, min(3, d) + 1):
            assert tk.F(n, d) == Matrix.identity(tk.source.dim(n, d))
    assert verify_chain_commutes(A, c, 3, 4, tk)


def test_non_cocycle_image_escapes():
    ctx = c2n_context(3)
    mu = ctx.element([(2, ((), ())), (1, (("t1",), ("t2",))), (-1, (("t1",), ())), (-1, ((), ("t2",)))])
    tk = TwistedKoszul(symmetric_algebra(3), Cocycle(mu), N=2)
    with pytest.raises(ImageEscape):
        tk.F(2, 3)


@pytest.mark.parametrize("name", ["qplane", "sym2", "ext2"])
def test_chain_commutes(name):
    A, c = problems()[name]
    tk = TwistedKoszul(A, c, N=4)
    rep = verify_chain_commutes(A, c, 4, 6, tk)
    assert rep and len(rep.entries) == sum(min(4, d) for d in range(1, 7))
    assert verify_chain_commutes(A, c, 4, 6, tk, inverse=True)
    for d in range(0, 7):
        for n in range(0, min(4, d) + 1):
            assert chain_map(A, c, n, d, tk).invertible()


@pytest.mark.parametrize("name", list(problems()))
def test_conjugation_transport(name):
    A, c = problems()[name]
    tk = TwistedKoszul(A, c, N=4)
    for d in range(1, 6):
        for n in range(1, min(4, d) + 1):
            src, dst = tk.source.differential(n, d), tk.target.differential(n, d)
            assert src.rank() == dst.rank()
            assert src.shape == dst.shape


@pytest.mark.parametrize("name", list(problems()))
def test_hilbert_preserved(name):
    A, c = problems()[name]
    T = twist_relations(A, c)
    assert A.hilbert_series(6) == T.hilbert_series(6)
    for d in range(0, 6):
        assert TwistedKoszul(A, c, N=1).target.dim(0, d) == T.dim(d)


# -- twisted module structure ------------------------------------------------------------

def _iterated_action(A, c, d):
    """φ_d : V^⊗d -> A_d, v_1⊗...⊗v_d ↦ v_1 ▷_μ (... ▷_μ v_d), in A's coordinates."""
    phi = Matrix.identity(A.dim_v)
    for k in range(1, d):
        phi = twisted_action(A, c, 0, k) @ Matrix.identity(A.dim_v).kron(phi)
    return phi


@pytest.mark.parametrize("name", ["qplane", "sym2", "ext3"])
def test_twisted_action_presents_twisted_algebra(name):
    A, c = problems()[name]
    T = twist_relations(A, c)
    for d in range(2, 5):
        phi = _iterated_action(A, c, d)
        assert kernel(phi) == T.relation_span(d)
        assert phi.rank() == A.dim(d)


def test_twisted_action_unit_cocycle_is_ordinary():
    A = symmetric_algebra(2)
    c = Cocycle(c2n_context(2).unit(2))
    K = KoszulComplex(A, N=2)
    for d in range(1, 4):
        act = twisted_action(A, c, 0, d, K)
        assert act == A.multiply(1, d)


@pytest.mark.parametrize("name", ["qplane", "sym2", "ext2"])
def test_twisted_action_is_a_module(name):
    """(v ⊗ w) ▷_μ m vanishes for v ⊗ w in R_μ: K_n(A) is an A_μ-module."""
    A, c = problems()[name]
    T = twist_relations(A, c)
    K = KoszulComplex(A, N=2)
    nv = A.dim_v
    rel = T.relations.basis.transpose()
    for n in range(0, 3):
        for d in range(n, 4):
            inner = twisted_action(A, c, n, d, K)
            outer = twisted_action(A, c, n, d + 1, K)
            both = outer @ Matrix.identity(nv).kron(inner)
            assert (both @ rel.kron(Matrix.identity(K.dim(n, d)))).is_zero(), (n, d)


def test_verify_smash():
    A = symmetric_algebra(2)
    ctx = c2n_context(2)
    assert verify_smash(A, ctx, 1, 2)
    assert verify_smash(A, ctx, 2, 3)
    trivial = WordHopfContext(2, {"e": Matrix.identity(2)}, {"e": [(1, ("e",), ("e",))]}, {"e": 1})
    assert verify_smash(A, trivial, 1, 2)
    broken = c2n_context(2, {"t1": [(1, ("t1",), ())]})
    res = verify_smash(A, broken, 1, 2)
    assert not res and res.witness[0] == "t1"
    assert verify_smash(quantum_plane(q), qplane_qt_context(), 1, 3)


# -- exactness -------------------------------------------------------------------------

@pytest.mark.parametrize("name", list(problems()))
def test_exactness(name):
    A, c = problems()[name]
    tk = TwistedKoszul(A, c, N=4)
    for X in (A, tk.target):
        rep = exactness_report(X, 4, 6)
        assert rep.exact and rep.square_zero
        assert rep.nonzero() == []


def test_exactness_examples():
    assert exactness_report(symmetric_algebra(2), 4, 5)
    assert exactness_report(quantum_plane(q.inverse()), 4, 5)


@pytest.mark.parametrize("name", ["qplane", "sym2", "ext3"])
def test_corrupted_entry_is_detected(name):
    A, c = problems()[name]
    K = TwistedKoszul(A, c, N=4).target
    d = 3
    # change d_1 in a column that im d_2 reaches, so d_1 d_2 != 0
    col = min(i for c2 in K.differential(2, d).columns() for i in c2)
    rep = exactness_report(K, 4, 6, corrupt=(1, d, 0, col))
    assert not rep.exact and not rep.square_zero
    assert rep.nonzero() and all(dd == d for (n, dd), v in rep.nonzero())
    assert exactness_report(K, 4, 6)


def test_non_koszul_control():
    nv = 2
    for d in range(4):
        brute = placements(NON_KOSZUL.relations.vectors(), nv, d) if d >= 2 else []
        assert NON_KOSZUL.dim(d) == nv ** d - sym_rank(brute, nv ** d)
    assert NON_KOSZUL.hilbert_series(4) == [1, 2, 2, 0, 0]
    assert NON_KOSZUL.quadratic_dual().hilbert_series(4) == [1, 2, 2, 0, 0]
    res = numerical_koszul_test(NON_KOSZUL, 6)
    assert not res and res.witness == 4
    rep = exactness_report(NON_KOSZUL, 4, 6)
    assert not rep.exact and rep.homology[(2, 4)] == 4


def test_numerical_examples():
    assert numerical_koszul_test(symmetric_algebra(3), 6)
    assert numerical_koszul_test(quantum_plane(q), 6)
    # dropping y⊗z - z⊗y from S(V) keeps the identity: dims 2^(d+1) - 1 against dual dims 1, 3, 2
    drop = QuadraticAlgebra.from_vectors(("x", "y", "z"), [{1: ONE, 3: -ONE}, {2: ONE, 6: -ONE}])
    assert drop.hilbert_series(6) == [2 ** (d + 1) - 1 for d in range(7)]
    assert drop.quadratic_dual().hilbert_series(3) == [1, 3, 2, 0]
    assert numerical_koszul_test(drop, 6)


@settings(max_examples=100)
@given(st.lists(st.sampled_from(range(4)), min_size=0, max_size=4, unique=True), st.data())
def test_monomial_algebras_are_koszul(words, data):
    A = QuadraticAlgebra.from_vectors(("x", "y"), [{w: ONE} for w in words])
    assert numerical_koszul_test(A, 5)
    assert exactness_report(A, 3, 4)
