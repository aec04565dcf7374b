"""Hopf actions on tensor powers, 2-cocycles, higher cocycles f_n and Drinfeld twists."""
from .cocycle import (
    Cocycle, VerificationResult, act, build_f, build_f_inverse, counit_at, inflate,
    twist_relations, verify_counital, verify_module_algebra, verify_qt_axioms, verify_two_cocycle,
)
from .elements import HopfElement, HopfExpr, Inverse, Product, WordHopfContext, formal_product
from .examples import (
    c2n_cocycle, c2n_context, mu_ij, qplane_cocycle, qplane_qt_context, qplane_r_matrix,
    qplane_twisted, r_matrix_oracle, uq_sl2_action, uq_sl2_context, uq_sl2_opposite_context,
)
from .quasitriangular import PlacedRProduct, QuasitriangularContext, flip

__all__ = [
    "Cocycle", "HopfElement", "HopfExpr", "Inverse", "PlacedRProduct", "Product",
    "QuasitriangularContext", "VerificationResult", "WordHopfContext", "act", "build_f",
    "build_f_inverse", "c2n_cocycle", "c2n_context", "counit_at", "flip", "formal_product",
    "inflate", "mu_ij", "qplane_cocycle", "qplane_qt_context", "qplane_r_matrix", "qplane_twisted",
    "r_matrix_oracle", "twist_relations", "uq_sl2_action", "uq_sl2_context",
    "uq_sl2_opposite_context", "verify_counital", "verify_module_algebra", "verify_qt_axioms",
    "verify_two_cocycle",
]
