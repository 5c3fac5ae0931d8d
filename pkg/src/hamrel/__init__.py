"""Reliability polynomials of two-terminal hammock networks.

Exact subset-counting oracle, simultaneous cubic fit of a network and its
dual from four known coefficients, coefficient-wise bound vectors, and
worst-case error guarantees, with a CLI for reports and figures.
"""

from .bounds import BoundsPair, bound_polynomials, stanley_bounds
from .errors import (
    DegenerateDimensionsError,
    DomainError,
    EnumerationCapError,
    GraphFormatError,
    HamrelError,
    InconsistentAnchorsError,
    InvalidBridgePointError,
    InvalidVectorError,
    SingularSystemError,
)
from .oracle import (
    EXHAUSTIVE_EDGE_CAP,
    HammockVariant,
    TwoTerminalGraph,
    conformance_variant,
    exact_coeffs,
    exact_coeffs_by_paths,
    make_hammock,
    parse_graph,
)
from .polynomials import (
    ApproxCoeffVector,
    BinomialTable,
    ExactCoeffVector,
    HammockDims,
    SplineParams,
    binomial_row,
    check_duality_identity,
    check_sum_complementarity,
    dual_coeffs,
    eval_nform,
    vector_from_doc,
    vector_from_json,
    vector_to_doc,
    vector_to_json,
)
from .profiles import PiecewiseLinear, binomial_envelope, coefficient_profile
from .spline import (
    ErrorBound,
    KnownAnchors,
    SplineModel,
    anchors_from_exact,
    approximate,
    assemble_general_system,
    assemble_unique_system,
    error_bound,
    model_from_doc,
    model_from_json,
    model_to_doc,
    model_to_json,
    solve_system,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxCoeffVector",
    "BinomialTable",
    "BoundsPair",
    "DegenerateDimensionsError",
    "DomainError",
    "EnumerationCapError",
    "ErrorBound",
    "EXHAUSTIVE_EDGE_CAP",
    "ExactCoeffVector",
    "GraphFormatError",
    "HammockDims",
    "HammockVariant",
    "HamrelError",
    "InconsistentAnchorsError",
    "InvalidBridgePointError",
    "InvalidVectorError",
    "KnownAnchors",
    "PiecewiseLinear",
    "SingularSystemError",
    "SplineModel",
    "SplineParams",
    "TwoTerminalGraph",
    "anchors_from_exact",
    "approximate",
    "assemble_general_system",
    "assemble_unique_system",
    "binomial_envelope",
    "binomial_row",
    "bound_polynomials",
    "check_duality_identity",
    "check_sum_complementarity",
    "coefficient_profile",
    "conformance_variant",
    "dual_coeffs",
    "error_bound",
    "eval_nform",
    "exact_coeffs",
    "exact_coeffs_by_paths",
    "make_hammock",
    "model_from_doc",
    "model_from_json",
    "model_to_doc",
    "model_to_json",
    "parse_graph",
    "solve_system",
    "stanley_bounds",
    "vector_from_doc",
    "vector_from_json",
    "vector_to_doc",
    "vector_to_json",
]
