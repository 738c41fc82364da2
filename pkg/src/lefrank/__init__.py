"""Canonical filtrations of graded sl(2) Borel modules, Lefschetz properties of
cohomology rings, and c-splitting certificates, all in exact rational arithmetic."""

from .linalg import MatrixQ, Subspace, image_basis, intersect, kernel_basis, preimage, rank, span_sum
from .modules import (BModule, GModule, GradedHom, GradedSpace, decompose_g, direct_sum, dual, irreducible,
                      is_bhom, is_shifted_equivariant, random_bmodule, shift, tensor, trivial, validate_b,
                      validate_g)
from .filtration import (CanonicalFiltration, MultiplicityTable, canonical_filtration, check_axioms,
                         filtration_dims, graded_piece, saturation_level, schur_vanishing, try_extend_to_g)
from .cohomology import (CohomologyRing, SymplecticData, hard_lefschetz, lef_fil_equiv_report,
                         lefschetz_bmodule, poincare_graded_pairing, validate_ring, weak_lefschetz)
from .constructions import (NilpotentLieAlgebra, blowup_bmodule, catalog, chevalley_eilenberg, product,
                            projective_space, torus)
from .spectral import DegenerationCertificate, FibrationSpec, certify_csplitting, e2_page, gap_certificate, \
    schur_report

__all__ = [
    "MatrixQ",
    "Subspace",
    "image_basis",
    "intersect",
    "kernel_basis",
    "preimage",
    "rank",
    "span_sum",
    "BModule",
    "GModule",
    "GradedHom",
    "GradedSpace",
    "decompose_g",
    "direct_sum",
    "dual",
    "irreducible",
    "is_bhom",
    "is_shifted_equivariant",
    "random_bmodule",
    "shift",
    "tensor",
    "trivial",
    "validate_b",
    "validate_g",
    "CanonicalFiltration",
    "MultiplicityTable",
    "canonical_filtration",
    "check_axioms",
    "filtration_dims",
    "graded_piece",
    "saturation_level",
    "schur_vanishing",
    "try_extend_to_g",
    "CohomologyRing",
    "SymplecticData",
    "hard_lefschetz",
    "lef_fil_equiv_report",
    "lefschetz_bmodule",
    "poincare_graded_pairing",
    "validate_ring",
    "weak_lefschetz",
    "NilpotentLieAlgebra",
    "blowup_bmodule",
    "catalog",
    "chevalley_eilenberg",
    "product",
    "projective_space",
    "torus",
    "DegenerationCertificate",
    "FibrationSpec",
    "certify_csplitting",
    "e2_page",
    "gap_certificate",
    "schur_report",
]

__version__ = "0.1.0"
