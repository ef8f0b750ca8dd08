import numpy as np
import pytest

import domain.steering as steering
from domain.errors import InconsistentInvariantsError, InternalConsistencyError, UnphysicalStateError
from domain.steering import (
    EPR_THRESHOLD,
    SteeringReport,
    assess,
    classify_from_invariants,
    classify_sns,
    classify_wns,
    epr_product,
    epr_steerable,
    hierarchy_report,
    hierarchy_violations,
    is_entangled,
)
from domain.symplectic import (
    CanonicalParams,
    GaussianState,
    SymplecticInvariants,
    apply_symplectic,
    canonical_params,
    check_physical,
    random_local_symplectic,
    symplectic_invariants,
)
from infra.enumerators.steering import Direction
from tests.factories import FIXTURE, FIXTURE_LAMBDA_SNS, FIXTURE_LAMBDA_WNS, low_discord, tmst_state, tmsv


def test_fixture_is_wns_but_separable(fixture_state):
    report = hierarchy_report(fixture_state)
    assert report.lambda_wns == pytest.approx(0.397122, abs=1e-5)
    assert report.lambda_sns == pytest.approx(12.377698, abs=1e-5)
    assert report.wns and not report.sns
    assert not report.epr_b_to_a and not report.epr_a_to_b
    assert not report.entangled and not report.marginal
    assert report.epr_product == pytest.approx(FIXTURE_LAMBDA_WNS * FIXTURE_LAMBDA_SNS, rel=1e-9)


def test_classifiers_on_raw_canonical_parameters():
    assert classify_wns(FIXTURE) == (pytest.approx(FIXTURE_LAMBDA_WNS, abs=1e-12), True)
    assert classify_sns(FIXTURE) == (pytest.approx(FIXTURE_LAMBDA_SNS, abs=1e-12), False)


def test_steerable_tmst_passes_every_criterion(steerable_tmst):
    report = hierarchy_report(steerable_tmst)
    assert report.wns and report.sns and report.epr_b_to_a and report.entangled
    assert report.epr_a_to_b
    assert report.lambda_wns == pytest.approx(0.224948, abs=1e-5)


def test_vacuum_sits_on_every_boundary():
    report = hierarchy_report(GaussianState.vacuum())
    assert report.lambda_wns == pytest.approx(0.5)
    assert not any((report.wns, report.sns, report.epr_b_to_a, report.epr_a_to_b, report.entangled))
    assert report.marginal


def test_unphysical_state_is_rejected_with_report():
    with pytest.raises(UnphysicalStateError) as exc:
        hierarchy_report(GaussianState.from_cm(0.3 * np.eye(4)))
    assert exc.value.report.min_ur_eigenvalue == pytest.approx(-0.2)


def test_epr_product_in_both_directions():
    canon = CanonicalParams(a=2.0, b=3.0, c1=1.5, c2=-1.0)
    assert epr_product(canon, Direction.B_TO_A) == pytest.approx((2.0 - 2.25 / 3.0) * (2.0 - 1.0 / 3.0))
    assert epr_product(canon, Direction.A_TO_B) == pytest.approx((3.0 - 2.25 / 2.0) * (3.0 - 1.0 / 2.0))
    assert epr_product(canon, "a-to-b") == epr_product(canon, Direction.A_TO_B)


def test_epr_is_one_way_for_asymmetric_thermal_noise():
    # thermal noise on A only: A steers B, B cannot steer A at this squeezing
    state = tmst_state(2.0, 0.0, 0.5)
    assert not epr_steerable(state, Direction.B_TO_A)
    assert epr_steerable(state, Direction.A_TO_B)
    assert assess(state.swapped()).epr_b_to_a == assess(state).epr_a_to_b


def test_cross_check_disagreement_raises(monkeypatch, fixture_state):
    monkeypatch.setattr(steering, "_epr_min_eigenvalue", lambda *_: -1.0)
    with pytest.raises(InternalConsistencyError, match="EPR criteria disagree"):
        epr_steerable(fixture_state, cross_check=True)
    assert not epr_steerable(fixture_state, cross_check=False)


def test_entanglement():
    assert is_entangled(tmsv(0.5))
    assert not is_entangled(CanonicalParams(a=1.5, b=2.5, c1=0.0, c2=0.0).to_state())
    assert not is_entangled(CanonicalParams(a=2.0, b=2.0, c1=1.0, c2=1.0).to_state())


@pytest.mark.parametrize(
    "report,expected",
    [
        (
            SteeringReport(0.4, 0.4, 0.16, True, True, True, True, True, False),
            [],
        ),
        (
            SteeringReport(0.6, 0.4, 0.24, False, True, False, False, False, False),
            ["SNS => WNS", "SNS => EPR(B->A)"],
        ),
        (
            SteeringReport(0.4, 0.6, 0.24, True, False, True, True, False, False),
            ["EPR(B->A) => entangled"],
        ),
    ],
)
def test_hierarchy_violations(report, expected):
    assert hierarchy_violations(report) == expected


def test_hierarchy_report_raises_on_violation(monkeypatch, steerable_tmst):
    monkeypatch.setattr(steering, "is_entangled", lambda *_: False)
    with pytest.raises(InternalConsistencyError, match="EPR\\(B->A\\) => entangled"):
        hierarchy_report(steerable_tmst)


def test_invariant_form_matches_canonical_form(fixture_state):
    inv = symplectic_invariants(fixture_state)
    assert classify_from_invariants(inv) == pytest.approx((FIXTURE_LAMBDA_WNS, FIXTURE_LAMBDA_SNS), abs=1e-9)


@pytest.mark.parametrize("seed", range(10))
def test_invariant_form_is_locally_invariant(seed, fixture_state):
    s_a, s_b = random_local_symplectic(seed)
    moved = apply_symplectic(fixture_state, s_a, s_b)
    assert classify_from_invariants(symplectic_invariants(moved)) == pytest.approx(
        (FIXTURE_LAMBDA_WNS, FIXTURE_LAMBDA_SNS), rel=1e-6
    )
    report = assess(moved)
    assert report.wns and not report.sns and not report.entangled


def test_invariant_form_rejects_inconsistent_invariants():
    with pytest.raises(InconsistentInvariantsError):
        classify_from_invariants(SymplecticInvariants(I1=1.0, I2=1.0, I3=1.0, I4=1.0))


@pytest.mark.parametrize("n", [3, 5, 10, 50])
def test_low_discord_family_is_weakly_steerable(n):
    canon = low_discord(n)
    assert check_physical(canon.to_state()).physical
    lam, wns = classify_wns(canon)
    assert wns
    assert lam == pytest.approx(n / (2 * n + 1), abs=1e-12)


def test_epr_threshold_is_vacuum_variance_squared():
    assert EPR_THRESHOLD == 0.25


def test_canonical_round_trip_of_moved_state(fixture_state):
    moved = apply_symplectic(fixture_state, *random_local_symplectic(3))
    canon = canonical_params(symplectic_invariants(moved))
    assert (canon.c1, canon.c2) == pytest.approx((13.7, -4.6), rel=1e-6)
