from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from oracles import same, sym, sym_matrix
from twistkit.errors import AmbientMismatch, DimensionError, DivisionByZero
from twistkit.exactla import (ONE, ZERO, Matrix, Scalar, Subspace, format_scalar, intersect, kernel,
                              kernel_basis, qnumber, rref, rref_naive)

s, q = Scalar.s(1), Scalar.q(1)

small_int = st.integers(-4, 4)
polys = st.lists(small_int, min_size=1, max_size=4).map(tuple)


@st.composite
def scalars(draw, constant=False):
    if constant:
        return Scalar(Fraction(draw(small_int), draw(st.integers(1, 4))))
    num = draw(polys)
    den = draw(polys.filter(lambda p: any(p)))
    return Scalar(num, den) * Scalar.s(draw(st.integers(-2, 2)))


@st.composite
def matrices(draw, constant=True, max_rows=5, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    sparse = st.one_of(st.just(ZERO), st.just(ZERO), scalars(constant))
    return Matrix.from_dense([[draw(sparse) for _ in range(c)] for _ in range(r)])


# -- scalars -------------------------------------------------------------------

def test_scalar_examples():
    half = Scalar(Fraction(1, 2))
    assert half + half == ONE
    assert s * s == q
    lhs = Scalar((-1, 0, 0, 0, 1), (0, 0, 1))   # (s^4 - 1)/s^2
    rhs = Scalar((-1, 0, 1), (0, 1))            # (s^2 - 1)/s
    assert lhs / rhs == Scalar((1, 0, 1), (0, 1))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(DivisionByZero):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        Scalar(1, 0)


def test_formatting():
    assert format_scalar(ONE) == "1"
    assert format_scalar(q) == "q"
    assert format_scalar(q.inverse()) == "q^-1"
    assert format_scalar(s + s.inverse()) == "(s^2 + 1)/s"
    assert format_scalar(qnumber(2)) == "(q^2 + 1)/q"
    assert format_scalar(ZERO) == "0"


def test_qnumber():
    assert qnumber(1) == ONE
    assert qnumber(2) == q + q.inverse()
    assert qnumber(3) == q * q + ONE + q.inverse() * q.inverse()


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a + b) - b == a
    if b:
        assert (a / b) * b == a


@given(scalars(), scalars())
def test_arithmetic_matches_sympy(a, b):
    assert sympy.simplify(sym(a * b) - sym(a) * sym(b)) == 0
    assert sympy.simplify(sym(a + b) - (sym(a) + sym(b))) == 0


@given(polys.filter(any), polys.filter(any), polys.filter(any))
def test_normalization_canonical(a, b, c):
    """a/b and (ac)/(bc) have identical stored forms."""
    x = Scalar(a, b)
    mul = lambda u, v: tuple(sum(u[i] * v[k - i] for i in range(len(u)) if 0 <= k - i < len(v)) for k in range(len(u) + len(v) - 1))  # noqa: E731
    y = Scalar(mul(a, c), mul(b, c))
    assert (x.num, x.den) == (y.num, y.den)
    assert hash(x) == hash(y)


# -- rref ----------------------------------------------------------------------

def test_rref_examples():
    red, rank, piv = rref(Matrix.from_dense([[2, 0], [0, 0]]))
    assert red == Matrix.from_dense([[1, 0]]) and rank == 1 and piv == [0]

    eye = Matrix.identity(3)
    red, rank, piv = rref(eye)
    assert red == eye and rank == 3 and piv == [0, 1, 2]

    red, rank, piv = rref(Matrix.from_dense([[1, q], [q.inverse(), 1]]))
    assert red == Matrix.from_dense([[1, q]]) and rank == 1


@given(matrices(constant=True))
def test_rref_constant_matches_sympy(m):
    red, rank, piv = rref(m)
    ref, ref_piv = sym_matrix(m).rref()
    assert list(piv) == list(ref_piv)
    assert same(red, ref[:rank, :])


@given(matrices(constant=False, max_rows=4, max_cols=4))
def test_rref_function_field_matches_naive_and_sympy(m):
    red, rank, piv = rref(m)
    assert (red, rank, piv) == rref_naive(m)
    ref, ref_piv = sym_matrix(m).rref(simplify=True)
    assert list(piv) == list(ref_piv)
    assert same(red, ref[:rank, :])


@given(matrices(constant=False, max_rows=4, max_cols=5))
def test_rref_idempotent(m):
    red, _, _ = rref(m)
    assert rref(red)[0] == red


@given(matrices(constant=True, max_rows=6, max_cols=7))
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert m.rank() + len(ker) == m.cols
    for v in ker:
        assert not m.apply(v)


@given(matrices(constant=False, max_rows=3, max_cols=4))
def test_rank_nullity_function_field(m):
    ker = kernel(m)
    assert m.rank() + ker.dim == m.cols
    for v in ker.vectors():
        assert not m.apply(v)


@given(matrices(constant=True, max_rows=4, max_cols=4).filter(lambda m: m.rows == m.cols))
def test_inverse(m):
    if m.rank() < m.rows:
        with pytest.raises(DimensionError):
            m.inverse()
    else:
        assert m @ m.inverse() == Matrix.identity(m.rows)


# -- subspaces -----------------------------------------------------------------

def test_kernel_examples():
    assert kernel(Matrix.zeros(2, 2)) == Subspace.full(2)
    assert kernel(Matrix.identity(2)) == Subspace.zero(2)


def test_intersect_examples():
    a = Subspace.span(3, [{0: ONE, 1: ONE}, {2: ONE}])
    assert a.intersect(a) == a
    assert intersect(Subspace.span(2, [{0: ONE}]), Subspace.span(2, [{1: ONE}])) == Subspace.zero(2)
    with pytest.raises(AmbientMismatch):
        a.intersect(Subspace.full(2))


def test_subspace_ops():
    v = {1: ONE, 2: -q.inverse()}
    half = Scalar.s(-1)
    assert Subspace.span(4, [v]) == Subspace.span(4, [{k: c * half for k, c in v.items()}])
    e1, e2 = Subspace.span(2, [{0: ONE}]), Subspace.span(2, [{1: ONE}])
    assert e1 + e2 == Subspace.full(2)
    assert (e1 + e2).contains(e1)
    assert not e1.contains(e2)
    assert e1.member({0: q})
    assert not e1.member({1: ONE})
    assert e1.coordinates({0: q}) == [q]
    with pytest.raises(AmbientMismatch):
        e1 == Subspace.full(3)


def test_tensor_of_subspaces():
    a = Subspace.span(2, [{0: ONE, 1: q}])
    b = Subspace.full(2)
    t = a.tensor(b)
    assert t.dim == 2
    assert t == Subspace.span(4, [{0: ONE, 2: q}, {1: ONE, 3: q}])


@st.composite
def subspace_pairs(draw):
    n = draw(st.integers(1, 8))
    entry = st.sampled_from([0, 0, 1, -1, 2])

    def vecs():
        k = draw(st.integers(0, n))
        return [{j: Scalar(x) for j in range(n) if (x := draw(entry))} for _ in range(k)]

    return Subspace.span(n, vecs()), Subspace.span(n, vecs())


@given(subspace_pairs())
def test_grassmann(pair):
    a, b = pair
    both = a.intersect(b)
    assert a.dim + b.dim == (a + b).dim + both.dim
    assert a.contains(both) and b.contains(both)
    assert (a + b).contains(a) and (a + b).contains(b)


@given(subspace_pairs())
def test_annihilator_reflexive(pair):
    a, _ = pair
    assert a.annihilator().dim + a.dim == a.ambient_dim
    assert a.annihilator().annihilator() == a


def test_rref_basis_invariants():
    sub = Subspace.span(4, [{0: q, 1: ONE}, {0: ONE, 3: s}, {1: ONE, 2: ONE}])
    for row, p in zip(sub.vectors(), sub.pivots):
        assert row[p] == ONE
        assert min(row) == p
    for other, p in enumerate(sub.pivots):
        assert sum(1 for row in sub.vectors() if p in row) == 1
