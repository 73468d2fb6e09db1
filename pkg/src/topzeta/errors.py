"""Shared exception types."""


class ValidationError(ValueError):
    """A structural invariant of the input data fails."""


class ConsistencyError(ArithmeticError):
    """An internal cross-check (two computation paths) disagrees."""
