"""Exception types shared across the toolkit."""

from __future__ import annotations


class StanleyKitError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(StanleyKitError):
    """Objects with different ambient variable counts were combined."""


class UndefinedStatisticsError(StanleyKitError):
    """Statistics requested for the zero ideal or the unit ideal."""


class UndefinedInputError(StanleyKitError):
    """An operation received an ideal outside its domain (zero or unit)."""


class ContractError(StanleyKitError):
    """A documented precondition was violated by the caller."""


class InternalInvariantViolation(StanleyKitError):
    """A state the underlying theory rules out was reached; a bug trap."""


class MalformedDecompositionError(StanleyKitError):
    """A decomposition piece is inconsistent with the ideal it claims to decompose."""


class ResourceLimitError(StanleyKitError):
    """A configured resource cap was exceeded.

    Carries whatever sound partial information was available when the limit
    fired: `lower_bound` is a valid Stanley depth lower bound, `size` the
    offending object size, `cap` the configured limit.
    """

    def __init__(self, message: str, *, size: int | None = None,
                 cap: int | None = None, lower_bound: int | None = None):
        super().__init__(message)
        self.size = size
        self.cap = cap
        self.lower_bound = lower_bound


class ParseError(StanleyKitError):
    """Malformed ideal text or JSON; carries a 1-based line and column."""

    def __init__(self, message: str, *, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
