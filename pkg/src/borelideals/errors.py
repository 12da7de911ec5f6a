"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when a caller-supplied value violates a documented precondition."""


class CapacityError(RuntimeError):
    """Raised when an exhaustive computation would exceed its configured bound."""


class StructuralError(RuntimeError):
    """Raised when an internal invariant fails; indicates a bug, not bad input."""
