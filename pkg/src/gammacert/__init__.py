"""Special-function kernel and inequality certification toolkit.

The package evaluates the log-gamma/digamma/polygamma family with its own
Stirling-series kernel, exposes the two-parameter function family

    h_{alpha,y}(x) = [Gamma(x+y+1)/Gamma(y+1)]^(1/x) / (x+y+1)^alpha

together with closed-form derivatives of ln h, and certifies sign conditions,
inequality windows, and classification scans over (alpha, y) with explicit
noise-aware verdicts.  The ``gammacert`` console script drives the suites.
"""

from .ballvol import ball_ratio_checks, log_omega, omega, recurrence_check
from .certify import (
    Certificate,
    Classification,
    Direction,
    GridSpec,
    ScanCell,
    Spacing,
    Verdict,
    certify_lcm,
    classify,
    default_grid,
    finite_diff_crosscheck,
    grid_points,
    in_conjecture_zone,
    necessity_limits,
    scan_alpha_y,
    scan_values,
    verify_thm3,
)
from .errors import CapabilityError, DomainError, ParameterError, PrecisionError
from .gammakit import (
    CONSTANTS,
    DEFAULT_OPTIONS,
    EULER_GAMMA,
    MAX_DERIV_ORDER,
    Constants,
    EvalOptions,
    digamma,
    lngamma,
    polygamma,
)
from .hfamily import (
    DerivSample,
    HParams,
    alpha_necessary_bound,
    bigH_eval,
    h_eval,
    log_h,
    logh_deriv,
    logh_derivs_with_scale,
    q_surface,
)
from .ineq import (
    AuxFn,
    CheckResult,
    aux_eval,
    batir_ineq,
    gamma_ratio_ineq,
    log_upper_bound_ineq,
    polygamma_bounds,
    psi_integral_mean_ineq,
    psi_log_bounds,
    psi_upper_refinement,
    qcub_root,
    suffice_chain,
    thm2_ineq,
)
from .means import gen_log_mean, log_mean
from .report import (
    Report,
    build_report,
    dumps,
    from_jsonable,
    make_timestamp,
    result_status,
    to_jsonable,
)

__version__ = "0.1.0"

__all__ = [
    "AuxFn",
    "CONSTANTS",
    "CapabilityError",
    "Certificate",
    "CheckResult",
    "Classification",
    "Constants",
    "DEFAULT_OPTIONS",
    "DerivSample",
    "Direction",
    "DomainError",
    "EULER_GAMMA",
    "EvalOptions",
    "GridSpec",
    "HParams",
    "MAX_DERIV_ORDER",
    "ParameterError",
    "PrecisionError",
    "Report",
    "ScanCell",
    "Spacing",
    "Verdict",
    "__version__",
    "alpha_necessary_bound",
    "aux_eval",
    "ball_ratio_checks",
    "batir_ineq",
    "bigH_eval",
    "build_report",
    "certify_lcm",
    "classify",
    "default_grid",
    "digamma",
    "dumps",
    "finite_diff_crosscheck",
    "from_jsonable",
    "gamma_ratio_ineq",
    "gen_log_mean",
    "grid_points",
    "h_eval",
    "in_conjecture_zone",
    "lngamma",
    "log_h",
    "log_mean",
    "log_omega",
    "log_upper_bound_ineq",
    "logh_deriv",
    "logh_derivs_with_scale",
    "make_timestamp",
    "necessity_limits",
    "omega",
    "polygamma",
    "polygamma_bounds",
    "psi_integral_mean_ineq",
    "psi_log_bounds",
    "psi_upper_refinement",
    "q_surface",
    "qcub_root",
    "recurrence_check",
    "result_status",
    "scan_alpha_y",
    "scan_values",
    "suffice_chain",
    "thm2_ineq",
    "to_jsonable",
    "verify_thm3",
]
