"""Real gamma, log-gamma and the k-deformed gamma function.

The k-gamma function of Diaz and Pariguan generalizes Euler's gamma through

    Gamma_k(z) = k**(z/k - 1) * Gamma(z/k),            k > 0,

so Gamma_1 is the classical function and Gamma_k(z + k) = z * Gamma_k(z)
replaces the familiar recurrence.  Everything here reduces to the C library
``tgamma``/``lgamma`` via :mod:`math`; the value added is domain policing
(poles raise instead of returning nonsense), overflow policing, sign
tracking for negative arguments, and an independent integral-representation
oracle used to cross-check the closed form in the tests.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError, OverflowRangeError, PoleError

# exp() overflows just above this; used to fail fast instead of raising
# from inside math.exp
_LOG_DBL_MAX = 709.782712893384


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"log_gamma expects a finite real, got {x!r}")
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def log_abs_gamma(x: float) -> tuple[float, float]:
    """Return (log|Gamma(x)|, sign of Gamma(x)) for real non-pole x.

    The sign of Gamma on (-n-1, -n) alternates: it is positive for x > 0 and
    flips across each negative integer, so floor(x) parity decides.
    """
    if not math.isfinite(x):
        raise DomainError(f"log_abs_gamma expects a finite real, got {x!r}")
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at x = {x}")
    if x > 0.0:
        return math.lgamma(x), 1.0
    sign = 1.0 if math.floor(x) % 2 == 0 else -1.0
    return math.lgamma(x), sign


def gamma(x: float) -> float:
    """Gamma(x) for real x away from the non-positive integers."""
    if not math.isfinite(x):
        raise DomainError(f"gamma expects a finite real, got {x!r}")
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at x = {x}")
    try:
        return math.gamma(x)
    except OverflowError:
        raise OverflowRangeError(f"gamma({x}) exceeds the double range") from None


def log_k_gamma(z: float, k: float) -> float:
    """log Gamma_k(z) for z, k > 0."""
    if not (math.isfinite(z) and math.isfinite(k)) or k <= 0.0:
        raise DomainError(f"log_k_gamma requires finite z and k > 0, got z={z}, k={k}")
    if z <= 0.0:
        raise DomainError(f"log_k_gamma requires z > 0, got {z}")
    t = z / k
    return (t - 1.0) * math.log(k) + math.lgamma(t)


def k_gamma(z: float, k: float) -> float:
    """Gamma_k(z) = k**(z/k - 1) * Gamma(z/k).

    Poles of Gamma(z/k) (i.e. z/k a non-positive integer) raise PoleError;
    results beyond the double range raise OverflowRangeError.  For moderate
    arguments the two-factor product is evaluated directly, which keeps the
    relative error at a couple of ulps; only near the representable edge do
    we switch to log space to decide between overflow and a finite value.
    """
    if not (math.isfinite(z) and math.isfinite(k)) or k <= 0.0:
        raise DomainError(f"k_gamma requires finite z and k > 0, got z={z}, k={k}")
    t = z / k
    if _is_nonpositive_integer(t):
        raise PoleError(f"k_gamma pole at z = {z} (z/k = {t})")
    log_mag = (t - 1.0) * math.log(k) + math.lgamma(t)
    if log_mag > _LOG_DBL_MAX:
        raise OverflowRangeError(f"k_gamma({z}, {k}) exceeds the double range")
    if abs(t) < 170.0 and abs(log_mag) < 700.0:
        power = k ** (t - 1.0)
        if math.isfinite(power) and power != 0.0:
            return power * math.gamma(t)
    # edge of the range: assemble from logs, sign from the Gamma factor
    sign = 1.0 if t > 0.0 or math.floor(t) % 2 == 0 else -1.0
    return sign * math.exp(log_mag)


def k_gamma_integral_oracle(z: float, k: float, tol: float = 1e-10) -> float:
    """Evaluate Gamma_k(z) = int_0^inf t**(z-1) exp(-t**k / k) dt directly.

    Deliberately independent of :func:`k_gamma`: the semi-infinite range is
    folded onto (0, 1) by t = u / (1 - u) and handed to the tanh-sinh rule,
    which absorbs the u**(z-1) endpoint singularity for z < 1.  Used as a
    ground-truth cross-check; too slow for production evaluation.
    """
    if not (z > 0.0 and k > 0.0):
        raise DomainError(f"integral representation needs z > 0 and k > 0, got z={z}, k={k}")
    from .quadrature import integrate

    def folded(u: float, omu: float) -> float:
        # log-space guards: t**k overflows long before the exp() recovers,
        # and the Jacobian 1/(1-u)**2 blows up at the right endpoint
        log_t = math.log(u) - math.log(omu)
        if k * log_t > _LOG_DBL_MAX:
            return 0.0
        log_f = (z - 1.0) * log_t - math.exp(k * log_t) / k - 2.0 * math.log(omu)
        if log_f < -745.0:
            return 0.0
        return math.exp(log_f)

    try:
        return integrate(folded, tol=tol, method="tanh_sinh").value
    except ConvergenceError as exc:
        raise ConvergenceError(
            f"k_gamma integral for z={z}, k={k} did not reach tol={tol}",
            partial=exc.partial,
        ) from None
