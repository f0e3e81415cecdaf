"""Admissible weighted extremal metrics on Hirzebruch and ruled surfaces."""
from .profile import (ExtremalProfile, MomentIntegrals, Positivity, cscs_condition, em_condition,
                      extremal_affine_coeffs, moment_integrals, profile, profile_from_integral,
                      profile_polynomial)
from .surface import JoinData, SurfaceClass, join_params, kahler_class
from .twins import (GenusTwin, TwinConic, TwinPair, conic_matrix_determinant, cscs_root,
                    cscs_twin, degenerate_classes, em_roots, existence_witness, genus_twin,
                    lebrun_em_roots, page_class_root, residual_enclosure, twin_conic, twin_of)

__all__ = [
    "ExtremalProfile", "GenusTwin", "JoinData", "MomentIntegrals", "Positivity", "SurfaceClass",
    "TwinConic", "TwinPair", "conic_matrix_determinant", "cscs_condition", "cscs_root",
    "cscs_twin", "degenerate_classes", "em_condition", "em_roots", "existence_witness",
    "extremal_affine_coeffs", "genus_twin", "join_params", "kahler_class", "lebrun_em_roots",
    "moment_integrals", "page_class_root", "profile", "profile_from_integral",
    "profile_polynomial", "residual_enclosure", "twin_conic", "twin_of",
]
