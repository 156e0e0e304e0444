"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LinrankError(Exception):
    """Base class for all errors raised by the package."""


class InputError(LinrankError, ValueError):
    """Malformed or out-of-range input."""


class CapacityError(LinrankError):
    """An exact computation was asked to run above its size guard.

    ``guard`` names the flag that controls the limit so callers can raise it.
    """

    def __init__(self, message: str, guard: str | None = None, limit: int | None = None):
        super().__init__(message)
        self.guard = guard
        self.limit = limit


class ContractError(LinrankError):
    """A precondition of an operation was violated by the caller."""


class InvariantError(LinrankError):
    """An internal invariant failed; ``witness`` carries the offending data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedEncodingError(LinrankError, ValueError):
    """A colored order cannot be decoded."""
