"""Exact volume bounds for lattice simplices with few interior lattice points.

All arithmetic is exact (:class:`fractions.Fraction` and Python integers).
"""
from .bounds import (
    BoundsReport,
    bounds_report,
    pikhurko_old_bound,
    theorem12_bound,
    theorem32_bound,
    thm15a_threshold,
    thm15b_bound,
)
from .errors import (
    BudgetError,
    DegenerateError,
    DimensionError,
    DomainError,
    EmptyInteriorError,
    InvariantViolation,
    LatSimplexError,
    PreconditionError,
    SingularMatrixError,
)
from .exact import (
    RationalMatrix,
    RationalPolynomial,
    RootEnclosure,
    count_roots,
    det,
    inverse,
    isolate_roots,
    solve_linear,
    sturm_sequence,
)
from .geometry import (
    BetaVector,
    LatticeSimplex,
    barycentric,
    check_pikhurko_volume_bound,
    interior_points,
    is_interior,
    maxmin_point,
    volume,
)
from .prodsum import (
    ImprovementWitness,
    build_ps_matrix,
    check_generalized,
    check_product_sum,
    find_small_image_vector,
    improve_point,
    improve_until_stable,
)
from .sylvester import sylvester, sylvester_list, zpw_simplex, zpw_volume
from .tau import (
    build_univariate,
    check_lemma31,
    grid_oracle,
    is_feasible,
    lemma51_bound,
    minimize_univariate,
    reconstruct_beta,
    tau_lower_bound,
)
from .verify import VerifyConfig, verify_all

__version__ = "0.1.0"

__all__ = [
    "BetaVector",
    "BoundsReport",
    "BudgetError",
    "DegenerateError",
    "DimensionError",
    "DomainError",
    "EmptyInteriorError",
    "ImprovementWitness",
    "InvariantViolation",
    "LatSimplexError",
    "LatticeSimplex",
    "PreconditionError",
    "RationalMatrix",
    "RationalPolynomial",
    "RootEnclosure",
    "SingularMatrixError",
    "VerifyConfig",
    "barycentric",
    "bounds_report",
    "build_ps_matrix",
    "build_univariate",
    "check_generalized",
    "check_lemma31",
    "check_pikhurko_volume_bound",
    "check_product_sum",
    "count_roots",
    "det",
    "find_small_image_vector",
    "grid_oracle",
    "improve_point",
    "improve_until_stable",
    "interior_points",
    "inverse",
    "is_feasible",
    "is_interior",
    "isolate_roots",
    "lemma51_bound",
    "maxmin_point",
    "minimize_univariate",
    "pikhurko_old_bound",
    "reconstruct_beta",
    "solve_linear",
    "sturm_sequence",
    "sylvester",
    "sylvester_list",
    "tau_lower_bound",
    "theorem12_bound",
    "theorem32_bound",
    "thm15a_threshold",
    "thm15b_bound",
    "verify_all",
    "volume",
    "zpw_simplex",
    "zpw_volume",
]
