"""Exact arithmetic over Q(s), q = s^2, and exact linear algebra on top of it."""
from .matrix import Matrix, inverse, kernel_basis, place_block, rref, rref_naive, vec_add, vec_scale
from .scalar import ONE, ZERO, Scalar, as_scalar, format_scalar, qnumber
from .subspace import Subspace, intersect, kernel

s = Scalar.s(1)
q = Scalar.q(1)

__all__ = [
    "Matrix", "Scalar", "Subspace", "ONE", "ZERO", "as_scalar", "format_scalar",
    "intersect", "inverse", "kernel", "kernel_basis", "place_block", "q", "qnumber",
    "rref", "rref_naive", "s", "vec_add", "vec_scale",
]
