"""Sparse exact matrices over Q(s).

A matrix stores one dict per row mapping column index to a nonzero
Scalar.  Matrices act on column vectors, so an operator from a space of
dimension n to one of dimension m is an m x n matrix and composition is
the matrix product in written order.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import SizeMismatch
from . import poly as P
from .scalar import ONE, ZERO, Scalar, as_scalar


class Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [{} for _ in range(rows)]
        elif len(data) != rows:
            raise SizeMismatch(f"expected {rows} rows, got {len(data)}")
        self.data = data

    # constructors
    @classmethod
    def from_dense(cls, entries, cols: int | None = None) -> "Matrix":
        entries = [list(r) for r in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        data = []
        for r in entries:
            if len(r) != cols:
                raise SizeMismatch("ragged matrix rows")
            row = {}
            for j, x in enumerate(r):
                x = as_scalar(x)
                if x:
                    row[j] = x
            data.append(row)
        return cls(len(entries), cols, data)

    @classmethod
    def from_columns(cls, rows: int, columns) -> "Matrix":
        """Build from a list of sparse column vectors (dicts index -> Scalar)."""
        columns = list(columns)
        data = [{} for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, x in col.items():
                if x:
                    data[i][j] = x
        return cls(rows, len(columns), data)

    @classmethod
    def from_rows(cls, cols: int, rows) -> "Matrix":
        data = [{j: x for j, x in r.items() if x} for r in rows]
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int, scale=ONE) -> "Matrix":
        scale = as_scalar(scale)
        if not scale:
            return cls.zeros(n, n)
        return cls(n, n, [{i: scale} for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def diagonal(cls, values) -> "Matrix":
        values = [as_scalar(v) for v in values]
        return cls(len(values), len(values), [{i: v} if v else {} for i, v in enumerate(values)])

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self.data[i].get(j, ZERO)

    def to_dense(self) -> list[list[Scalar]]:
        return [[r.get(j, ZERO) for j in range(self.cols)] for r in self.data]

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self.data) if j in r}

    def columns(self) -> list[dict]:
        out = [{} for _ in range(self.cols)]
        for i, r in enumerate(self.data):
            for j, x in r.items():
                out[j][i] = x
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self.data)

    def is_zero(self) -> bool:
        return not any(self.data)

    def is_constant(self) -> bool:
        return all(x.is_constant() for r in self.data for x in r.values())

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.to_dense())

    # algebra
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    __hash__ = None

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise SizeMismatch(f"cannot add {self.shape} and {other.shape}")
        data = []
        for a, b in zip(self.data, other.data):
            row = dict(a)
            for j, x in b.items():
                y = row.get(j)
                if y is None:
                    row[j] = x
                else:
                    y = y + x
                    if y:
                        row[j] = y
                    else:
                        del row[j]
            data.append(row)
        return Matrix(self.rows, self.cols, data)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [{j: -x for j, x in r.items()} for r in self.data])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        if not c:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix(self.rows, self.cols, [{j: x * c for j, x in r.items()} for r in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        odata = other.data
        data = []
        for r in self.data:
            acc: dict = {}
            for k, a in r.items():
                for j, b in odata[k].items():
                    y = acc.get(j)
                    acc[j] = a * b if y is None else y + a * b
            data.append({j: x for j, x in acc.items() if x})
        return Matrix(self.rows, other.cols, data)

    def apply(self, vec: dict) -> dict:
        """Image of a sparse column vector."""
        out: dict = {}
        for i, r in enumerate(self.data):
            acc = ZERO
            if len(r) < len(vec):
                for j, a in r.items():
                    x = vec.get(j)
                    if x is not None:
                        acc = acc + a * x
            else:
                for j, x in vec.items():
                    a = r.get(j)
                    if a is not None:
                        acc = acc + a * x
            if acc:
                out[i] = acc
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.columns())

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; the left factor is the most significant index."""
        m, n = other.rows, other.cols
        data = []
        for ra in self.data:
            for rb in other.data:
                row = {}
                for ja, a in ra.items():
                    base = ja * n
                    for jb, b in rb.items():
                        row[base + jb] = a * b
                data.append(row)
        return Matrix(self.rows * m, self.cols * n, data)

    def select_rows(self, idx) -> "Matrix":
        return Matrix(len(idx), self.cols, [dict(self.data[i]) for i in idx])

    def select_columns(self, idx) -> "Matrix":
        where = {j: k for k, j in enumerate(idx)}
        data = [{where[j]: x for j, x in r.items() if j in where} for r in self.data]
        return Matrix(self.rows, len(idx), data)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise SizeMismatch("column counts differ")
        return Matrix(self.rows + other.rows, self.cols,
                      [dict(r) for r in self.data] + [dict(r) for r in other.data])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise SizeMismatch("row counts differ")
        off = self.cols
        data = []
        for a, b in zip(self.data, other.data):
            row = dict(a)
            for j, x in b.items():
                row[off + j] = x
            data.append(row)
        return Matrix(self.rows, self.cols + other.cols, data)

    def first_difference(self, other: "Matrix"):
        """Column index of the first basis vector on which two matrices differ, or None."""
        if self.shape != other.shape:
            raise SizeMismatch("shapes differ")
        diff = self - other
        bad = [j for r in diff.data for j in r]
        return min(bad) if bad else None

    # elimination
    def rref(self) -> tuple["Matrix", int, list[int]]:
        return rref(self)

    def rank(self) -> int:
        return rref(self)[1]

    def kernel_basis(self) -> list[dict]:
        return kernel_basis(self)

    def inverse(self) -> "Matrix":
        return inverse(self)


# -- row reduction -----------------------------------------------------------

def _rref_constant(data: list[dict], cols: int):
    rows = [{j: x.to_fraction() for j, x in r.items()} for r in data]
    rows = [r for r in rows if r]
    pivots = []
    done = 0
    for c in range(cols):
        piv = None
        for i in range(done, len(rows)):
            if c in rows[i]:
                piv = i
                break
        if piv is None:
            continue
        rows[done], rows[piv] = rows[piv], rows[done]
        prow = rows[done]
        inv = 1 / prow[c]
        if inv != 1:
            prow = {j: x * inv for j, x in prow.items()}
            rows[done] = prow
        for i in range(len(rows)):
            if i == done:
                continue
            r = rows[i]
            a = r.get(c)
            if a is None:
                continue
            for j, x in prow.items():
                y = r.get(j, 0) - a * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
        pivots.append(c)
        done += 1
        if done == len(rows):
            break
    out = [{j: Scalar.from_fraction(x) if isinstance(x, Fraction) else as_scalar(x)
            for j, x in rows[i].items()} for i in range(done)]
    return out, pivots


def _poly_lcm(a: tuple, b: tuple) -> tuple:
    g = P.pgcd(a, b)
    return P.divexact(P.mul(a, b), g) if len(g) > 1 else P.mul(a, b)


def _rref_function_field(data: list[dict], cols: int):
    # clear denominators row by row, then Gauss-Jordan without fractions
    rows = []
    for r in data:
        if not r:
            continue
        lcm = (1,)
        for x in r.values():
            if x.den != lcm:
                lcm = _poly_lcm(lcm, x.den)
        rows.append({j: P.mul(x.num, P.divexact(lcm, x.den)) for j, x in r.items()})
    pivots = []
    prev = (1,)
    done = 0
    for c in range(cols):
        piv = None
        for i in range(done, len(rows)):
            if c in rows[i]:
                piv = i
                break
        if piv is None:
            continue
        rows[done], rows[piv] = rows[piv], rows[done]
        prow = rows[done]
        p = prow[c]
        for i in range(len(rows)):
            if i == done:
                continue
            r = rows[i]
            a = r.get(c)
            new = {}
            if a is None:
                for j, x in r.items():
                    new[j] = P.divexact(P.mul(p, x), prev)
            else:
                keys = set(r) | set(prow)
                for j in keys:
                    x = P.sub(P.mul(p, r.get(j, ())), P.mul(a, prow.get(j, ())))
                    if x:
                        new[j] = P.divexact(x, prev)
            rows[i] = new
        prev = p
        pivots.append(c)
        done += 1
    out = []
    for i in range(done):
        r = rows[i]
        p = r[pivots[i]]
        out.append({j: Scalar(x, p) for j, x in r.items()})
    return out, pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns.

    Constant matrices are eliminated over Q directly.  Matrices with
    genuine rational-function entries use fraction-free Gauss-Jordan
    (Bareiss/Montante) over Z[s] after clearing row denominators.
    """
    if m.is_constant():
        rows, pivots = _rref_constant(m.data, m.cols)
    else:
        rows, pivots = _rref_function_field(m.data, m.cols)
    return Matrix(len(rows), m.cols, rows), len(pivots), pivots


def rref_naive(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Textbook Gauss-Jordan with Scalar arithmetic; a cross-check for rref."""
    rows = [dict(r) for r in m.data if r]
    pivots = []
    done = 0
    for c in range(m.cols):
        piv = next((i for i in range(done, len(rows)) if c in rows[i]), None)
        if piv is None:
            continue
        rows[done], rows[piv] = rows[piv], rows[done]
        inv = rows[done][c].inverse()
        prow = {j: x * inv for j, x in rows[done].items()}
        rows[done] = prow
        for i in range(len(rows)):
            if i != done and c in rows[i]:
                a = rows[i][c]
                r = rows[i]
                for j, x in prow.items():
                    y = r.get(j, ZERO) - a * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
        pivots.append(c)
        done += 1
    return Matrix(done, m.cols, rows[:done]), done, pivots


def kernel_basis(m: Matrix) -> list[dict]:
    """A basis of the null space, one sparse vector per free column."""
    red, rank, pivots = rref(m)
    pivset = set(pivots)
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = {f: ONE}
        for i, c in enumerate(pivots):
            x = red.data[i].get(f)
            if x is not None:
                v[c] = -x
        out.append(v)
    return out


def inverse(m: Matrix) -> Matrix:
    from ..errors import DimensionError

    if m.rows != m.cols:
        raise SizeMismatch("only square matrices have inverses")
    n = m.rows
    red, rank, pivots = rref(m.hstack(Matrix.identity(n)))
    if rank < n or pivots[n - 1] != n - 1:
        raise DimensionError("matrix is singular")
    return Matrix(n, n, [{j - n: x for j, x in r.items() if j >= n} for r in red.data])


def place_block(blocks, rows: int, cols: int) -> Matrix:
    """Assemble a matrix from (row offset, col offset, Matrix) blocks."""
    data = [{} for _ in range(rows)]
    for r0, c0, b in blocks:
        for i, r in enumerate(b.data):
            target = data[r0 + i]
            for j, x in r.items():
                y = target.get(c0 + j)
                if y is None:
                    target[c0 + j] = x
                else:
                    y = y + x
                    if y:
                        target[c0 + j] = y
                    else:
                        del target[c0 + j]
    return Matrix(rows, cols, data)


def vec_add(u: dict, v: dict, c=ONE) -> dict:
    """u + c*v for sparse vectors."""
    out = dict(u)
    for j, x in v.items():
        y = out.get(j, ZERO) + c * x
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return out


def vec_scale(v: dict, c) -> dict:
    c = as_scalar(c)
    if not c:
        return {}
    return {j: x * c for j, x in v.items()}
