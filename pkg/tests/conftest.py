import pytest

from domain.symplectic import CanonicalParams, GaussianState
from tests.factories import FIXTURE, tmst_state


@pytest.fixture
def fixture_state() -> GaussianState:
    return FIXTURE.to_state()


@pytest.fixture
def steerable_tmst() -> GaussianState:
    return tmst_state(0.75, 0.75, 1.2)


@pytest.fixture
def product_state() -> GaussianState:
    return CanonicalParams(a=1.0, b=1.0, c1=0.0, c2=0.0).to_state()
