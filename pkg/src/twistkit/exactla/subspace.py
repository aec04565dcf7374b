"""Subspaces of a based vector space, stored canonically by an RREF basis."""
from __future__ import annotations

from ..errors import AmbientMismatch, SizeMismatch
from .matrix import Matrix, kernel_basis, rref
from .scalar import ZERO


class Subspace:
    """A subspace of k^ambient_dim.

    The basis is a matrix in reduced row-echelon form, one row per basis
    vector, so two subspaces are equal exactly when their bases coincide.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: list[int], *, _checked=False):
        if not _checked:
            basis, _, pivots = rref(basis)
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, ambient_dim: int, vectors) -> "Subspace":
        """Span of sparse vectors (dicts) or of the rows of a Matrix."""
        if isinstance(vectors, Matrix):
            if vectors.cols != ambient_dim:
                raise SizeMismatch("vectors live in a different ambient space")
            m = vectors
        else:
            m = Matrix.from_rows(ambient_dim, vectors)
        red, _, piv = rref(m)
        return cls(ambient_dim, red, piv, _checked=True)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim), [], _checked=True)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), list(range(ambient_dim)), _checked=True)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[dict]:
        return [dict(r) for r in self.basis.data]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        self._check(other)
        return self.basis == other.basis

    __hash__ = None

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not other.dim:
            return self
        if not self.dim:
            return other
        return Subspace.span(self.ambient_dim, self.basis.vstack(other.basis))

    sum = __add__

    def annihilator(self) -> "Subspace":
        """Vectors orthogonal to self under the standard dot pairing."""
        return Subspace.span(self.ambient_dim, kernel_basis(self.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient_dim)
        if self.dim == self.ambient_dim:
            return other
        if other.dim == self.ambient_dim:
            return self
        return (self.annihilator() + other.annihilator()).annihilator()

    def coordinates(self, vec: dict):
        """Coordinates of vec in the RREF basis, or None if vec is not a member."""
        coords = [vec.get(p, ZERO) for p in self.pivots]
        rebuilt: dict = {}
        for c, row in zip(coords, self.basis.data):
            if not c:
                continue
            for j, x in row.items():
                y = rebuilt.get(j, ZERO) + c * x
                if y:
                    rebuilt[j] = y
                else:
                    rebuilt.pop(j, None)
        if rebuilt != {j: x for j, x in vec.items() if x}:
            return None
        return coords

    def member(self, vec: dict) -> bool:
        return self.coordinates(vec) is not None

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.member(v) for v in other.basis.data)

    def tensor(self, other: "Subspace") -> "Subspace":
        """self ⊗ other inside the tensor product of the ambients.

        The Kronecker product of two RREF matrices is again in RREF, so
        no elimination is needed.
        """
        n = other.ambient_dim
        basis = self.basis.kron(other.basis)
        pivots = [p * n + r for p in self.pivots for r in other.pivots]
        return Subspace(self.ambient_dim * n, basis, pivots, _checked=True)

    def image(self, m: Matrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise SizeMismatch("operator does not act on this ambient space")
        return Subspace.span(m.rows, [m.apply(v) for v in self.basis.data])


def kernel(m: Matrix) -> Subspace:
    """Null space of m as a Subspace of k^cols."""
    return Subspace.span(m.cols, kernel_basis(m))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)
