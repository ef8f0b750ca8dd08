from __future__ import annotations

from enum import IntEnum

from pydantic import ValidationError

from domain.errors import InvalidInputError, OutputError, SteerlabError, UnphysicalStateError


class ExitCode(IntEnum):
    OK = 0
    FAILURE = 1
    MALFORMED_INPUT = 2
    UNPHYSICAL_STATE = 3
    UNWRITABLE_OUTPUT = 4
    HIERARCHY_VIOLATION = 5


def exit_code_for(error: BaseException) -> ExitCode:
    """Map an exception raised by a command to its process exit code."""
    match error:
        case InvalidInputError() | ValidationError():
            return ExitCode.MALFORMED_INPUT
        case UnphysicalStateError():
            return ExitCode.UNPHYSICAL_STATE
        case OutputError():
            return ExitCode.UNWRITABLE_OUTPUT
        case SteerlabError():
            return ExitCode.FAILURE
    return ExitCode.FAILURE
