"""Exception types shared across the package."""


class SzegocubError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SzegocubError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(SzegocubError, ValueError):
    """A rule specification, parameter list, or job description is invalid."""


class ConvergenceError(SzegocubError, RuntimeError):
    """An iterative procedure exhausted its budget before reaching tolerance."""


class DegenerateInputError(SzegocubError, ValueError):
    """Input is too close to a degenerate configuration (coincident points)."""


class SingularityError(SzegocubError, ArithmeticError):
    """A denominator collapsed below the representable floating-point range."""
