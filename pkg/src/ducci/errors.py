"""Exception types shared across the package."""


class DucciError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(DucciError):
    """Two tuples with different modulus or length were combined."""


class HypothesisError(DucciError):
    """An operation was invoked outside the hypotheses it is valid under."""


class BudgetExceededError(DucciError):
    """A configured iteration/enumeration budget was exhausted."""
