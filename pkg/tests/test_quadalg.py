import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import leg_permutation, placements, sym_rank
from twistkit.errors import DegreeTooSmall, LegOutOfRange, LetterOutOfRange, SizeMismatch
from twistkit.exactla import ONE, Matrix, Scalar, Subspace
from twistkit.quadalg import (QuadraticAlgebra, exterior_algebra, place_operator, quantum_plane,
                              symmetric_algebra, tensor_algebra, word_index, word_letters)

q = Scalar.q(1)


def algebras():
    return {
        "qplane": quantum_plane(q),
        "sym3": symmetric_algebra(3),
        "ext3": exterior_algebra(3),
        "ext2": exterior_algebra(2),
        "tensor2": tensor_algebra(2),
        "full": QuadraticAlgebra.from_vectors(("x", "y"), [{k: ONE} for k in range(4)]),
        "skew": QuadraticAlgebra.from_vectors(("x", "y"), [{1: ONE, 2: q}, {0: ONE, 3: -ONE}]),
    }


def test_word_index_examples():
    assert word_index([], 2) == 0
    assert word_index([0], 2) == 0 and word_index([1], 2) == 1
    assert word_index([1, 0], 2) == 2
    assert word_letters(2, 2, 2) == (1, 0)
    with pytest.raises(LetterOutOfRange):
        word_index([2], 2)


@given(st.integers(1, 3), st.integers(0, 4), st.data())
def test_word_index_bijective(dim, d, data):
    letters = data.draw(st.lists(st.integers(0, dim - 1), min_size=d, max_size=d))
    assert word_letters(word_index(letters, dim), d, dim) == tuple(letters)


def test_place_operator_examples():
    swap = Matrix.from_columns(4, [{0: ONE}, {2: ONE}, {1: ONE}, {3: ONE}])
    assert place_operator(swap, (1, 2), 3, 2) == swap.kron(Matrix.identity(2))
    assert place_operator(Matrix.identity(4), (1, 3), 3, 2) == Matrix.identity(8)
    with pytest.raises(LegOutOfRange):
        place_operator(swap, (2, 4), 3, 2)
    with pytest.raises(SizeMismatch):
        place_operator(Matrix.identity(3), (1, 2), 3, 2)


@st.composite
def placed_case(draw):
    dim = draw(st.integers(1, 2))
    m = draw(st.integers(2, 4))
    legs = tuple(sorted(draw(st.lists(st.integers(1, m), min_size=2, max_size=2, unique=True))))
    k = dim * dim
    entries = st.sampled_from([0, 0, 1, -1, 3])
    M = Matrix.from_dense([[Scalar(draw(entries)) for _ in range(k)] for _ in range(k)])
    return dim, m, legs, M


@given(placed_case())
def test_place_operator_matches_permutation_conjugation(case):
    dim, m, legs, M = case
    # move the chosen legs to the front, act there, move back
    rest = [k for k in range(1, m + 1) if k not in legs]
    order = list(legs) + rest             # position p of the conjugated frame holds leg order[p]
    perm = [order.index(k) for k in range(1, m + 1)]
    P = leg_permutation(perm, m, dim)
    Pinv = leg_permutation([order[p] - 1 for p in range(m)], m, dim)
    assert Pinv @ P == Matrix.identity(dim ** m)
    expected = Pinv @ M.kron(Matrix.identity(dim ** (m - 2))) @ P
    assert place_operator(M, legs, m, dim) == expected


def test_relation_span_examples():
    A = quantum_plane(q)
    assert A.relation_span(2) == Subspace.span(4, [{1: ONE, 2: -q}])
    assert A.relation_span(3).dim == 4
    assert tensor_algebra(2).relation_span(4) == Subspace.zero(16)
    with pytest.raises(DegreeTooSmall):
        A.relation_span(1)


@pytest.mark.parametrize("name", list(algebras()))
def test_relation_span_matches_placements(name):
    A = algebras()[name]
    n = A.dim_v
    for d in range(2, 5):
        brute = placements(A.relations.vectors(), n, d)
        span = A.relation_span(d)
        assert span.dim == sym_rank(brute, n ** d)
        assert all(span.member(v) for v in brute)
        assert A.dim(d) + span.dim == n ** d


@pytest.mark.parametrize("name", list(algebras()))
def test_normal_words_are_non_pivots(name):
    A = algebras()[name]
    for d in range(2, 5):
        span = Subspace.span(A.dim_v ** d, placements(A.relations.vectors(), A.dim_v, d))
        non_pivots = [j for j in range(A.dim_v ** d) if j not in set(span.pivots)]
        assert list(A.graded_component(d).normal_words) == non_pivots


def test_hilbert_examples():
    assert quantum_plane(q).hilbert_series(5) == [1, 2, 3, 4, 5, 6]
    assert symmetric_algebra(3).hilbert_series(3) == [1, 3, 6, 10]
    assert exterior_algebra(3).hilbert_series(4) == [1, 3, 3, 1, 0]
    assert exterior_algebra(2).hilbert_series(3) == [1, 2, 1, 0]
    assert tensor_algebra(2).hilbert_series(5) == [2 ** d for d in range(6)]
    assert algebras()["full"].hilbert_series(4) == [1, 2, 0, 0, 0]


def test_multiply_examples():
    A = quantum_plane(q)
    y_x = A.reduce_word([1, 0])
    x_y = A.reduce_word([0, 1])
    assert x_y == {k: c * q for k, c in y_x.items()}
    assert exterior_algebra(2).reduce_word([0, 0]) == {}
    for d in range(4):
        eye = Matrix.identity(A.dim(d))
        assert A.multiply(0, d) == eye and A.multiply(d, 0) == eye


@pytest.mark.parametrize("name", ["qplane", "sym3", "ext3", "skew", "full"])
def test_multiply_associative(name):
    A = algebras()[name]
    for a in range(0, 3):
        for b in range(0, 3):
            for c in range(0, 5 - a - b):
                left = A.multiply(a + b, c) @ A.multiply(a, b).kron(Matrix.identity(A.dim(c)))
                right = A.multiply(a, b + c) @ Matrix.identity(A.dim(a)).kron(A.multiply(b, c))
                assert left == right


def test_multiply_is_concatenation():
    A = symmetric_algebra(3)
    for w in ([2, 1], [2, 1, 0], [1, 2, 0, 1]):
        k = len(w)
        left = A.reduce_word(w[:1])
        right = A.reduce_word(w[1:])
        prod = A.multiply(1, k - 1).apply({i * A.dim(k - 1) + j: a * b
                                           for i, a in left.items() for j, b in right.items()})
        assert prod == A.reduce_word(w)


def test_quadratic_dual_examples():
    A = quantum_plane(q)
    dual = A.quadratic_dual()
    expected = Subspace.span(4, [{0: ONE}, {3: ONE}, {1: ONE, 2: q.inverse()}])
    assert dual.relations == expected
    assert dual.hilbert_series(3) == [1, 2, 1, 0]
    assert dual.quadratic_dual().relations == A.relations
    assert symmetric_algebra(2).quadratic_dual().hilbert_series(3) == [1, 2, 1, 0]


def test_symmetric_dual_is_exterior():
    # ann of span{xy - yx} is span{xx, yy, xy + yx}
    assert symmetric_algebra(2).quadratic_dual().relations == exterior_algebra(2).relations


@pytest.mark.parametrize("name", list(algebras()))
def test_dual_dimension(name):
    A = algebras()[name]
    assert A.relations.dim + A.quadratic_dual().relations.dim == A.dim_v ** 2
