"""Numerical laboratory for non-open C1 maps F(x) = exp(-1/G(x)) * x.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: vector types, map construction, derivatives, the rank-one
solve, radial inversion, and the certificate runners.
"""

from nonopen._core import (
    ConfigError,
    GridFunction,
    Map,
    NotInvertibleError,
    NumericalRangeError,
    ParameterError,
    RepresentationError,
    SparseVector,
    certify_no_preimage,
    classify_point,
    divergence_report,
    f_eval,
    f_invert_radial,
    gamma_sequence,
    gauge_eval,
    gauge_grad_apply,
    gauge_grad_lipschitz_bound,
    gradcheck_json_text,
    jf_apply,
    jf_solve,
    nonopen_json_text,
    remainder_bounds_q5,
    run_gradcheck,
    run_models,
    run_nonopen,
    run_report,
    strong_norm,
    weak_norm,
    weaksep_witness,
)

__all__ = [
    "ConfigError",
    "GridFunction",
    "Map",
    "NotInvertibleError",
    "NumericalRangeError",
    "ParameterError",
    "RepresentationError",
    "SparseVector",
    "certify_no_preimage",
    "classify_point",
    "divergence_report",
    "f_eval",
    "f_invert_radial",
    "gamma_sequence",
    "gauge_eval",
    "gauge_grad_apply",
    "gauge_grad_lipschitz_bound",
    "gradcheck_json_text",
    "jf_apply",
    "jf_solve",
    "nonopen_json_text",
    "remainder_bounds_q5",
    "run_gradcheck",
    "run_models",
    "run_nonopen",
    "run_report",
    "strong_norm",
    "weak_norm",
    "weaksep_witness",
]

__version__ = "0.1.0"
