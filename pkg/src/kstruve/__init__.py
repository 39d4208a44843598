"""Generalized k-Struve special functions and numerical identity verification.

The package evaluates the k-deformed gamma function, the generalized
k-Struve series (with the classical Struve H and modified Struve L as
special cases) and the Fox-Wright series p Psi q, and cross-checks
closed-form integral identities built from them against adaptive quadrature.
"""

from .cli import RunConfig
from .errors import (
    ConvergenceError,
    DomainError,
    KStruveError,
    NonFiniteSampleError,
    OverflowRangeError,
    PoleError,
    UsageError,
)
from .gamma import gamma, k_gamma, k_gamma_integral_oracle, log_abs_gamma, log_gamma
from .identities import (
    IDENTITIES,
    TheoremParams,
    corollary_modified,
    corollary_struve,
    default_grid,
    theorem1_integrand,
    theorem1_lhs,
    theorem1_rhs_corrected,
    theorem1_rhs_paper,
    theorem2_integrand,
    theorem2_lhs,
    theorem2_rhs_corrected,
    theorem2_rhs_paper,
    verify,
    verify_grid,
)
from .quadrature import (
    integrate,
    lavoie_trottier_check,
    lavoie_trottier_rhs,
    select_method,
)
from .results import EvaluationResult, IdentityReport, QuadratureResult, Verdict
from .struve import StruveParams, k_struve, struve_h, struve_l, struve_ode_residual
from .wright import WrightSpec, convergence_index, wright_eval

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EvaluationResult",
    "IDENTITIES",
    "IdentityReport",
    "KStruveError",
    "NonFiniteSampleError",
    "OverflowRangeError",
    "PoleError",
    "QuadratureResult",
    "RunConfig",
    "StruveParams",
    "TheoremParams",
    "UsageError",
    "Verdict",
    "WrightSpec",
    "convergence_index",
    "corollary_modified",
    "corollary_struve",
    "default_grid",
    "gamma",
    "integrate",
    "k_gamma",
    "k_gamma_integral_oracle",
    "k_struve",
    "lavoie_trottier_check",
    "lavoie_trottier_rhs",
    "log_abs_gamma",
    "log_gamma",
    "select_method",
    "struve_h",
    "struve_l",
    "struve_ode_residual",
    "theorem1_integrand",
    "theorem1_lhs",
    "theorem1_rhs_corrected",
    "theorem1_rhs_paper",
    "theorem2_integrand",
    "theorem2_lhs",
    "theorem2_rhs_corrected",
    "theorem2_rhs_paper",
    "verify",
    "verify_grid",
    "wright_eval",
]
