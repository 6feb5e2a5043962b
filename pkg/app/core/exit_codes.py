"""Process exit statuses and the exceptions that map to them."""

from core.errors import (
    EmptyInputError,
    FrechetError,
    InvariantViolation,
    MalformedInputError,
    ParameterError,
    SizeLimitError,
)

OK = 0
USAGE = 1
BAD_INPUT = 2
INVARIANT = 3


class UsageError(Exception):
    """Command-line arguments are missing or inconsistent."""


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, InvariantViolation):
        return INVARIANT
    if isinstance(exc, (UsageError, ParameterError, SizeLimitError)):
        return USAGE
    if isinstance(exc, (MalformedInputError, EmptyInputError, FrechetError)):
        return BAD_INPUT
    return INVARIANT
