"""Quaternionic cross-ratio and fractional linear transformations of H u {inf}."""

from .correspondence import (
    FivePointSolution,
    FourPointSolution,
    align_two_vectors,
    align_vector,
    normalize_to_standard,
    solve_five,
    solve_four,
    solve_three,
)
from .crossratio import (
    CrossRatioInvariant,
    chain_invariant,
    conjugator_identity_residual,
    cross_ratio,
    five_point_chain,
    r_invariant,
)
from .errors import (
    DegenerateError,
    DegenerateInput,
    DivisionByZero,
    DuplicatePoints,
    FitFailure,
    HypothesisViolation,
    Infeasible,
    InfeasibleError,
    InfiniteCrossRatio,
    InvariantMismatch,
    NormMismatch,
    QuatCrossError,
    SingularMatrix,
    ZeroVector,
)
from .geometry import (
    AffineSubspace,
    PointLocus,
    SphereK,
    apollonius,
    contains,
    fit_sphere,
    is_cocircular,
    is_cospherical5,
    locus_fifth,
    locus_fourth,
    map_locus,
    norm_level_set,
)
from .moebius import (
    MatGL2H,
    Moebius,
    apply,
    compose,
    difference_identity_residual,
    inverse,
    make_matrix,
    theta_stabilizer,
)
from .quaternion import (
    INF,
    ONE,
    ZERO,
    I,
    J,
    K,
    Quaternion,
    Rotation3,
    commutator,
    conj,
    conj_by,
    inv,
    isclose,
    mul,
    norm,
    rotate,
    rotation_from,
    to_complex_matrix,
)
from .tolerance import Tolerance, get_tolerance, set_tolerance, tolerance

__version__ = "0.1.0"

__all__ = [
    "FivePointSolution",
    "FourPointSolution",
    "align_two_vectors",
    "align_vector",
    "normalize_to_standard",
    "solve_five",
    "solve_four",
    "solve_three",
    "CrossRatioInvariant",
    "chain_invariant",
    "conjugator_identity_residual",
    "cross_ratio",
    "five_point_chain",
    "r_invariant",
    "DegenerateError",
    "DegenerateInput",
    "DivisionByZero",
    "DuplicatePoints",
    "FitFailure",
    "HypothesisViolation",
    "Infeasible",
    "InfeasibleError",
    "InfiniteCrossRatio",
    "InvariantMismatch",
    "NormMismatch",
    "QuatCrossError",
    "SingularMatrix",
    "ZeroVector",
    "AffineSubspace",
    "PointLocus",
    "SphereK",
    "apollonius",
    "contains",
    "fit_sphere",
    "is_cocircular",
    "is_cospherical5",
    "locus_fifth",
    "locus_fourth",
    "map_locus",
    "norm_level_set",
    "MatGL2H",
    "Moebius",
    "apply",
    "compose",
    "difference_identity_residual",
    "inverse",
    "make_matrix",
    "theta_stabilizer",
    "INF",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
    "Quaternion",
    "Rotation3",
    "commutator",
    "conj",
    "conj_by",
    "inv",
    "isclose",
    "mul",
    "norm",
    "rotate",
    "rotation_from",
    "to_complex_matrix",
    "Tolerance",
    "get_tolerance",
    "set_tolerance",
    "tolerance",
    "__version__",
]
