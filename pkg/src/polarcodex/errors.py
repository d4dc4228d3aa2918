"""Typed errors shared across the package."""


class PolarCodexError(Exception):
    """Base class for all package errors."""


class CodeParseError(PolarCodexError):
    """A code file or inline word list could not be parsed."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class EmptyCodeError(PolarCodexError):
    """The empty code was passed where a nonempty one is required."""


class FullCodeError(PolarCodexError):
    """The full code has the zero ideal; invariants are undefined."""


class ZeroIdealError(PolarCodexError):
    """The zero ideal has no Betti table."""


class UnitIdealError(PolarCodexError):
    """The unit ideal is rejected at the ideal layer."""


class EngineMismatchError(PolarCodexError):
    """Independent Betti engines disagreed on the same input."""
