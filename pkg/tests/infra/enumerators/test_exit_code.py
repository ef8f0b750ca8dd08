import pytest
from pydantic import BaseModel, ValidationError

from domain.errors import (
    InconsistentInvariantsError,
    InternalConsistencyError,
    InvalidInputError,
    OutputError,
    UnphysicalStateError,
)
from domain.symplectic import PhysicalityReport
from infra.enumerators.exit_code import ExitCode, exit_code_for


class _Strict(BaseModel):
    x: int


def _validation_error() -> ValidationError:
    try:
        _Strict.model_validate({"x": "not a number"})
    except ValidationError as exc:
        return exc
    raise AssertionError("validation should fail")


@pytest.mark.parametrize(
    "error,expected",
    [
        (InvalidInputError(), ExitCode.MALFORMED_INPUT),
        (_validation_error(), ExitCode.MALFORMED_INPUT),
        (UnphysicalStateError(PhysicalityReport(True, False, -0.1)), ExitCode.UNPHYSICAL_STATE),
        (OutputError(), ExitCode.UNWRITABLE_OUTPUT),
        (InconsistentInvariantsError(), ExitCode.FAILURE),
        (InternalConsistencyError(), ExitCode.FAILURE),
        (KeyError("x"), ExitCode.FAILURE),
    ],
)
def test_exit_code_for(error, expected):
    assert exit_code_for(error) is expected


def test_exit_code_values_are_stable():
    assert [int(code) for code in ExitCode] == [0, 1, 2, 3, 4, 5]
