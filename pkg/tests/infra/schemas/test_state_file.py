import json

import numpy as np
import pytest
from pydantic import ValidationError

from infra.schemas.state_file import StateFile
from tests.factories import FIXTURE

_FIXTURE_CM = FIXTURE.to_state().cm.tolist()


def test_cm_form_with_mean():
    state = StateFile.model_validate({"cm": _FIXTURE_CM, "mean": [1.0, 0.0, 0.0, 0.0]}).to_state()
    np.testing.assert_array_equal(state.cm, FIXTURE.to_state().cm)
    np.testing.assert_array_equal(state.mean, [1.0, 0.0, 0.0, 0.0])


def test_canonical_form():
    state = StateFile.model_validate({"canonical": {"a": 13.9, "b": 13.9, "c1": 4.6, "c2": -13.7}}).to_state()
    np.testing.assert_array_equal(state.cm, FIXTURE.to_state().cm)


def test_tmst_form():
    state = StateFile.model_validate({"tmst": {"na": 0.75, "nb": 0.75, "r": 1.2}}).to_state()
    assert state.cm[0, 0] == pytest.approx(6.946184, abs=1e-6)
    assert state.cm[1, 3] == pytest.approx(-6.832787, abs=1e-6)


def test_json_input():
    text = json.dumps({"canonical": {"a": 1.0, "b": 1.0, "c1": 0.0, "c2": 0.0}})
    assert StateFile.model_validate_json(text).canonical.a == 1.0


@pytest.mark.parametrize(
    "payload",
    [
        {},
        {"cm": _FIXTURE_CM, "tmst": {"na": 0.0, "nb": 0.0, "r": 1.0}},
        {"canonical": {"a": 1.0, "b": 1.0, "c1": 0.0, "c2": 0.0}, "mean": [0.0, 0.0, 0.0, 0.0]},
        {"cm": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]},
        {"cm": [[1.0, 0.3, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]]},
        {"canonical": {"a": -1.0, "b": 1.0, "c1": 0.0, "c2": 0.0}},
        {"canonical": {"a": 1.0, "b": 1.0, "c1": 0.0}},
        {"tmst": {"na": 0.0, "nb": 0.0, "r": -1.0}},
        {"tmst": {"na": 0.0, "nb": 0.0, "r": 1.0, "extra": 1}},
        {"state": "vacuum"},
    ],
)
def test_malformed_state_files_are_rejected(payload):
    with pytest.raises(ValidationError):
        StateFile.model_validate(payload)


def test_non_finite_values_are_rejected():
    with pytest.raises(ValidationError):
        StateFile.model_validate_json('{"canonical": {"a": NaN, "b": 1.0, "c1": 0.0, "c2": 0.0}}')


def test_nearly_symmetric_cm_is_accepted():
    cm = [row[:] for row in _FIXTURE_CM]
    cm[0][2] += 1e-12
    assert StateFile.model_validate({"cm": cm}).cm is not None
