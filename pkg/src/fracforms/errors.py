"""Exception types shared across the package."""


class FracformsError(Exception):
    """Base class for all package errors."""


class DomainError(FracformsError, ValueError):
    """A parameter lies outside the admissible range of a formula."""


class PoleError(DomainError):
    """Gamma function evaluated at a non-positive integer."""


class DivergenceError(FracformsError, ValueError):
    """A requested integral does not converge for the given profile."""


class UnsupportedProfileError(FracformsError, TypeError):
    """An operation does not support the given profile family."""


class ConvergenceError(FracformsError, RuntimeError):
    """Quadrature failed to stabilize under refinement.

    Carries a `diagnostic` dict with the resolutions tried and the
    residual disagreement, so callers can report or retry.
    """

    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class QuadratureBudgetError(ConvergenceError):
    """The node budget required to resolve an oscillatory integral
    exceeds the configured limit (wide cutoff supports, large frequency)."""
