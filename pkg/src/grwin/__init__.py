"""Exact window-shift calculus on Grassmannian flop models."""

from .autoequiv import (
    FixedPointVector,
    cotwist_on_generator,
    k_class,
    k_matrix,
    o1_matrix,
    tensor_twist,
    twist_on_generator,
)
from .bott import BwbClass, Dominant, NonRegular, Regular, bwb_cohomology, classify, twisted_action
from .bundles import BundleLabel, GradedComplex, StackParams, normalize, rank, relabel_to_x
from .characters import (
    SchurBivariate,
    cauchy_truncated,
    euler_character,
    hom_invariant_dimension,
    pushforward_character,
    verify_exactness,
)
from .partitions import StaircaseResult, add_full_column, complement, staircase, strip
from .resolutions import (
    jshriek_jlower,
    pushdown_pi,
    pushdown_pi_bruteforce,
    theorem_resolution,
    unstable_resolution_twisted,
)
from .schur import lr_coefficient, pieri_filtration, schur_dimension, schur_product
from .windows import gamma_set, gamma_split, in_window, window_generators

__all__ = [
    "BundleLabel", "BwbClass", "Dominant", "FixedPointVector", "GradedComplex",
    "NonRegular", "Regular", "SchurBivariate", "StackParams", "StaircaseResult",
    "add_full_column", "bwb_cohomology", "cauchy_truncated", "classify",
    "complement", "cotwist_on_generator", "euler_character", "gamma_set",
    "gamma_split", "hom_invariant_dimension", "in_window", "jshriek_jlower",
    "k_class", "k_matrix", "lr_coefficient", "normalize", "o1_matrix",
    "pieri_filtration", "pushdown_pi", "pushdown_pi_bruteforce",
    "pushforward_character", "rank", "relabel_to_x", "schur_dimension",
    "schur_product", "staircase", "strip", "tensor_twist",
    "theorem_resolution", "twist_on_generator", "twisted_action",
    "unstable_resolution_twisted", "verify_exactness", "window_generators",
]
