"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed its configured guard."""


class InternalConsistencyError(ArithmeticError):
    """Raised when two routes that must agree exactly do not.

    Hitting this always indicates a bug, never bad user input.
    """
