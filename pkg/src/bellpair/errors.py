"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class ConsistencyError(RuntimeError):
    """Two independent computation routes disagree beyond tolerance."""
