"""Exception hierarchy shared by every module in the package.

All failures raised on purpose derive from :class:`KStruveError`, so callers
(and the CLI exit-code mapping) can distinguish our diagnostics from genuine
bugs.  Each leaf class also inherits the closest builtin so that generic
``except ValueError`` style handlers keep working.
"""

from __future__ import annotations


class KStruveError(Exception):
    """Base class for all errors raised deliberately by this package."""


class DomainError(KStruveError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation would hit, or land within rounding distance of, a gamma pole."""


class OverflowRangeError(KStruveError, OverflowError):
    """The exact result is finite but does not fit in a double."""


class ConvergenceError(KStruveError, RuntimeError):
    """An iterative scheme stopped before reaching the requested tolerance.

    ``partial`` carries the best available result (if any) so that callers
    can degrade gracefully instead of discarding all the work.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class NonFiniteSampleError(KStruveError, ArithmeticError):
    """An integrand returned NaN or +/-inf at a quadrature node."""


class UsageError(KStruveError, ValueError):
    """Malformed command line or configuration input."""
