"""Exception types shared across the package."""

from __future__ import annotations


class PatvarsError(ValueError):
    """Base class for all input/usage errors raised by this package."""


class PatternSyntaxError(PatvarsError):
    """Malformed pattern, word, equation, or graph-file text.

    ``position`` is the 1-indexed character position of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NoVariablesError(PatvarsError):
    """Raised by operations that require at least one variable."""

    def __init__(self, message: str = "no variables"):
        super().__init__(message)


class SubstitutionError(PatvarsError):
    """Missing variable image, or an empty image in non-erasing mode."""


class WrongClassError(PatvarsError):
    """Pattern does not belong to the class a specialized matcher requires."""

    def __init__(self, message: str = "wrong class"):
        super().__init__(message)


class InvalidMarkingError(PatvarsError):
    """Marking sequence is not a valid witness for the requested operation."""

    def __init__(self, message: str = "invalid marking sequence"):
        super().__init__(message)


class AlphabetTooLargeError(PatvarsError):
    """Too many distinct symbols for the exact exponential algorithms."""

    def __init__(self, message: str = "alphabet too large for exact locality"):
        super().__init__(message)


class ParameterTooLargeError(PatvarsError):
    """Structural parameter exceeds the cap of a specialized matcher."""

    def __init__(self, message: str = "parameter too large; use brute"):
        super().__init__(message)


class GraphError(PatvarsError):
    """Malformed or unsupported graph input (self-loops, disconnected, ...)."""
