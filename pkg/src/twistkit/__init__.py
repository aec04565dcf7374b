"""Exact checks for Drinfeld twists of quadratic algebras.

Subpackages:

    exactla   scalars in Q(s) with q = s^2, sparse matrices, subspaces
    quadalg   quadratic algebras T(V)/(R), graded pieces, quadratic duals
    hopf      Hopf actions on tensor powers, 2-cocycles, f_n, twisted relations
    koszul    Koszul complexes, the chain maps F_n, exactness reports
    cli       the ``twistkit`` command and its problem-file format
"""
from .exactla import Matrix, Scalar, Subspace
from .hopf import Cocycle, build_f, twist_relations, verify_counital, verify_two_cocycle
from .koszul import KoszulComplex, TwistedKoszul, exactness_report, numerical_koszul_test
from .quadalg import QuadraticAlgebra

__version__ = "0.1.0"

__all__ = [
    "Cocycle", "KoszulComplex", "Matrix", "QuadraticAlgebra", "Scalar", "Subspace", "TwistedKoszul",
    "build_f", "exactness_report", "numerical_koszul_test", "twist_relations", "verify_counital",
    "verify_two_cocycle",
]
