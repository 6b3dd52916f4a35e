"""Exception hierarchy shared across the package."""

from __future__ import annotations


class SiegelError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SiegelError):
    """Input lies outside the mathematical domain of an operation."""


class BoundError(SiegelError):
    """A coefficient table is not deep enough for the requested computation."""


class TruncationError(BoundError):
    """A series or Jacobi form is truncated too shallowly."""


class FormatError(SiegelError):
    """A table file violates the SIEGEL-TABLE v1 grammar or its invariants."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
