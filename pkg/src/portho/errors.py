class InputError(ValueError):
    """Raised when an operation receives malformed or out-of-contract input."""


class SpecError(InputError):
    """Raised when a space-spec document fails validation; message names the field."""


class UnsupportedError(RuntimeError):
    """Raised when an operation is asked for a family it does not support."""
