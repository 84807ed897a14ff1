"""nclindep: exact linear-dependence certificates for polynomials in
noncommuting variables, and matrix-local dependence testing at the sizes
where local certifies global."""

from .freealg import (
    NcPoly,
    ZERO_DEGREE,
    coefficient_matrix,
    expand_combination,
    global_dependence,
)
from .locdep import (
    BoundReport,
    DecideOptions,
    DecisionReport,
    DeciderDisagreementError,
    FockOperators,
    FockSizeError,
    compute_bounds,
    decide_dependence,
    directional_dependence_sample,
    fock_certify,
    fock_shift_operators,
    local_dependence_sample,
)
from .matexact import (
    CapelliRankBound,
    MatTuple,
    Matrix,
    PowerDependence,
    capelli_rank_bound_check,
    derive_trial_seed,
    eval_alternating,
    evaluate_poly,
    mat_rank,
    matrix_from_json,
    matrix_to_json,
    power_dependence_check,
    random_matrix_tuple,
    verify_local_dependence_exact,
)
from .parsing import PolyParseError, format_poly, parse_poly
from .scalars import QQ, FieldMismatchError, ModP, PrimeField, field_from_name
from .specialpoly import (
    CapelliComposition,
    capelli_compose,
    capelli_poly,
    central_poly_2x2,
    commutator_embed,
    razmyslov_symbolic_dependence,
    standard_poly,
)
from .verdict import DEPENDENT, INDEPENDENT, NO_WITNESS_FOUND, DependenceVerdict

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapelliComposition",
    "CapelliRankBound",
    "DecideOptions",
    "DecisionReport",
    "DeciderDisagreementError",
    "DependenceVerdict",
    "DEPENDENT",
    "FieldMismatchError",
    "FockOperators",
    "FockSizeError",
    "INDEPENDENT",
    "MatTuple",
    "Matrix",
    "ModP",
    "NcPoly",
    "NO_WITNESS_FOUND",
    "PolyParseError",
    "PowerDependence",
    "PrimeField",
    "QQ",
    "ZERO_DEGREE",
    "capelli_compose",
    "capelli_poly",
    "capelli_rank_bound_check",
    "central_poly_2x2",
    "coefficient_matrix",
    "commutator_embed",
    "compute_bounds",
    "decide_dependence",
    "derive_trial_seed",
    "directional_dependence_sample",
    "eval_alternating",
    "evaluate_poly",
    "expand_combination",
    "field_from_name",
    "fock_certify",
    "fock_shift_operators",
    "format_poly",
    "global_dependence",
    "local_dependence_sample",
    "mat_rank",
    "matrix_from_json",
    "matrix_to_json",
    "parse_poly",
    "power_dependence_check",
    "random_matrix_tuple",
    "razmyslov_symbolic_dependence",
    "standard_poly",
    "verify_local_dependence_exact",
]
