"""Evaluation codes from divisorial polytopes on curves."""

from . import instances
from .algebra import MatrixFp, Poly, primitive_root
from .codes import (
    BudgetExceeded,
    EvaluationCode,
    EvaluationSetup,
    admissible_points,
    build_code,
    compare_with_product,
    d_exact,
    d_lower,
    d_lower_surface,
    d_upper,
    hasse_weil_diagnostic,
    k_bounds,
    kronecker_generator,
    one_point_ag_generator,
    reed_solomon_generator,
    ruled_closed_forms,
    ruled_divpoly,
    toric_generator,
    weight_enumerator,
)
from .convex import (
    ConcavePL,
    LatticePolytope,
    SupportFunctionSlice,
    dual_of_slice,
    floor_sum_over_lattice,
    signed_ceiling_interior_sum,
    slice_of_dual,
    sup_convolution,
    toric_polytope,
)
from .curve import (
    INFINITY,
    Curve,
    CurvePoint,
    Divisor,
    FunctionFieldElement,
    divisor_of,
    evaluate,
    is_principal,
    leading_coefficient,
    riemann_roch_basis,
    twisted_evaluate,
    valuation,
)
from .problemfile import ParseError, ProblemSpec, parse, render
from .tvariety import (
    DivisorialPolytope,
    TWeilDivisor,
    ValidationReport,
    box_lambda,
    euler_characteristic,
    genus_of_section,
    graded_sections,
    inn,
    intersection_number,
    is_ample,
    is_semiample,
    mixed_volume,
    nu,
    point_divisor_dual,
    project,
    section_zero_ray_coefficients,
    self_intersection,
    sharp,
    validate,
    volume,
    weil_divisor,
)

__all__ = [
    "BudgetExceeded",
    "ConcavePL",
    "Curve",
    "CurvePoint",
    "Divisor",
    "DivisorialPolytope",
    "EvaluationCode",
    "EvaluationSetup",
    "FunctionFieldElement",
    "INFINITY",
    "LatticePolytope",
    "MatrixFp",
    "ParseError",
    "Poly",
    "ProblemSpec",
    "SupportFunctionSlice",
    "TWeilDivisor",
    "ValidationReport",
    "admissible_points",
    "box_lambda",
    "build_code",
    "compare_with_product",
    "d_exact",
    "d_lower",
    "d_lower_surface",
    "d_upper",
    "divisor_of",
    "dual_of_slice",
    "euler_characteristic",
    "evaluate",
    "floor_sum_over_lattice",
    "genus_of_section",
    "graded_sections",
    "hasse_weil_diagnostic",
    "inn",
    "instances",
    "intersection_number",
    "is_ample",
    "is_principal",
    "is_semiample",
    "k_bounds",
    "kronecker_generator",
    "leading_coefficient",
    "mixed_volume",
    "nu",
    "one_point_ag_generator",
    "parse",
    "point_divisor_dual",
    "primitive_root",
    "project",
    "reed_solomon_generator",
    "render",
    "riemann_roch_basis",
    "ruled_closed_forms",
    "ruled_divpoly",
    "section_zero_ray_coefficients",
    "self_intersection",
    "sharp",
    "signed_ceiling_interior_sum",
    "slice_of_dual",
    "sup_convolution",
    "toric_generator",
    "toric_polytope",
    "twisted_evaluate",
    "validate",
    "valuation",
    "volume",
    "weight_enumerator",
    "weil_divisor",
]
