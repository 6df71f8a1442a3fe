class InputError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class ContractViolation(AssertionError):
    """Raised when an internal invariant fails on valid input."""
