"""Exception types shared across the toolkit."""

from __future__ import annotations


class MatroidError(Exception):
    """Base class for toolkit errors."""


class CapExceededError(MatroidError):
    """An enumeration would exceed a hard safety cap."""

    def __init__(self, message: str, dimension: int, cap: int) -> None:
        super().__init__(message)
        self.dimension = dimension
        self.cap = cap


class MalformedInputError(MatroidError):
    """A matrix/graph/name input could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotConnectedError(MatroidError):
    """An operation requiring a connected matroid got a disconnected one."""


class NotRegularError(MatroidError):
    """An operation requiring a regular matroid got a non-regular one."""


class InvalidConstructionError(MatroidError):
    """Parameters describe no valid instance of the requested construction."""
