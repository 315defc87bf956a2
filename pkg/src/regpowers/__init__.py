"""Exact computation of Castelnuovo-Mumford regularity for powers of curve
ideal sheaves, via the Picard lattice of a quartic surface and the negative
Pell equation. All arithmetic is arbitrary-precision integer; there is no
floating point anywhere in the core.
"""

from .quadratic import (
    QuadraticNumber,
    floor_mul_sqrt,
    is_perfect_square,
    isqrt,
)
from .pell import (
    CFExpansion,
    NegativePellUnsolvableError,
    PellSolution,
    cf_expand_sqrt,
    convergents,
    iter_negative_pell_solutions,
    negative_pell_solutions,
    negative_pell_solvable,
    sqrt2_denominators,
)
from .lattice import (
    HYPERPLANE,
    DivisorClass,
    degree_in_p3,
    euler_char,
    form_q,
    h0_ample,
    in_effective_cone,
    is_ample,
    pairing,
    sectional_genus,
)
from .surface import (
    ConePosition,
    ParameterError,
    Strictness,
    SurfaceParams,
    cone_position,
    difference_class,
    floor_r_lambda1,
    floor_r_lambda2,
    lambda_bounds,
    validate_params,
)
from .cohomology import (
    UNKNOWN,
    CohomologyValue,
    UnknownValueError,
    h1_threshold_witness,
    h_blowup,
    h_ideal_power,
    h_surface,
    known,
    sigma,
)
from .regularity import (
    RegRecord,
    exception_set,
    limit_gap,
    reg_closed_form,
    reg_scan,
    sparsity_check,
)
from .cli import run_cli

__version__ = "0.1.0"

__all__ = [
    "CFExpansion",
    "CohomologyValue",
    "ConePosition",
    "DivisorClass",
    "HYPERPLANE",
    "NegativePellUnsolvableError",
    "ParameterError",
    "PellSolution",
    "QuadraticNumber",
    "RegRecord",
    "Strictness",
    "SurfaceParams",
    "UNKNOWN",
    "UnknownValueError",
    "cf_expand_sqrt",
    "cone_position",
    "convergents",
    "degree_in_p3",
    "difference_class",
    "euler_char",
    "exception_set",
    "floor_mul_sqrt",
    "floor_r_lambda1",
    "floor_r_lambda2",
    "form_q",
    "h0_ample",
    "h1_threshold_witness",
    "h_blowup",
    "h_ideal_power",
    "h_surface",
    "in_effective_cone",
    "is_ample",
    "is_perfect_square",
    "isqrt",
    "iter_negative_pell_solutions",
    "known",
    "lambda_bounds",
    "limit_gap",
    "negative_pell_solutions",
    "negative_pell_solvable",
    "pairing",
    "reg_closed_form",
    "reg_scan",
    "run_cli",
    "sectional_genus",
    "sigma",
    "sparsity_check",
    "sqrt2_denominators",
    "validate_params",
]
