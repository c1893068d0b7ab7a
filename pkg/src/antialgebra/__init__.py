"""Exact computations for finite-dimensional Hom-Lie antialgebras."""

from .algebra import (
    GradedMorphism, GradedSubspacePair, HomLieAntialgebra, StructureError, abelian, build,
    center, derived_ideal, direct_sum, graph_of, is_homomorphism, is_ideal, is_multiplicative,
    is_perfect, is_subalgebra, product_spans, verify_axioms,
)
from .builtins import K1Window, builtin, exe02, exe02_extension, k3
from .report import Check, Report, Witness

__version__ = "0.1.0"

__all__ = [
    "Check", "GradedMorphism", "GradedSubspacePair", "HomLieAntialgebra", "K1Window", "Report",
    "StructureError", "Witness", "abelian", "build", "builtin", "center", "derived_ideal",
    "direct_sum", "exe02", "exe02_extension", "graph_of", "is_homomorphism", "is_ideal",
    "is_multiplicative", "is_perfect", "is_subalgebra", "k3", "product_spans", "verify_axioms",
]
