"""Exceptions shared by the distance engines and the command line."""

from typing import Optional


class FrechetError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(FrechetError, ValueError):
    """Input text or values do not follow the expected format."""

    def __init__(self, message: str, *, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        prefix = ""
        if source:
            prefix += f"{source}:"
        if line is not None:
            prefix += f"line {line}: "
        elif prefix:
            prefix += " "
        super().__init__(prefix + message)


class EmptyInputError(FrechetError, ValueError):
    """A computation that needs at least one cell received an empty grid."""


class ParameterError(FrechetError, ValueError):
    """A width, threshold or generator parameter is out of range."""


class SizeLimitError(FrechetError):
    """A guarded computation was asked to exceed its size limit."""


class InvariantViolation(FrechetError):
    """Two engines disagree, or an instrumented bound does not hold."""
