"""Exception types shared across the package."""


class ZetavevError(Exception):
    """Base class for all package errors."""


class GammaPoleError(ZetavevError, ValueError):
    """Gamma evaluated at a non-positive integer."""


class ZetaPoleError(ZetavevError, ValueError):
    """Hurwitz/Riemann zeta evaluated at s = 1."""


class NonpositiveParameterError(ZetavevError, ValueError):
    """A parameter that must be positive was not."""


class DegreeError(ZetavevError, ValueError):
    """Requested Bernoulli degree exceeds the precomputed table."""


class ZeroModeError(ZetavevError, ValueError):
    """A spectral family contains a zero eigenvalue where none is allowed."""


class PoleOrderMismatchError(ZetavevError, ValueError):
    """Numerator and denominator Laurent data have different pole orders."""


class ZeroDenominatorError(ZetavevError, ZeroDivisionError):
    """Denominator Laurent data is identically zero at the gauge point."""


class IllConditionedFitError(ZetavevError, ValueError):
    """Smoothing schedule too narrow or too sparse for a stable fit."""


class TailNotNegligibleError(ZetavevError, ValueError):
    """Quadrature truncation point leaves a non-negligible damped tail."""


class DenominatorUnderflowError(ZetavevError, ArithmeticError):
    """All retained series terms vanished numerically."""


class ConfigError(ZetavevError, ValueError):
    """Scenario configuration could not be parsed or validated."""
