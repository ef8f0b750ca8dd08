import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domain.conditioning import GeneralGaussian, condition_on_b, condition_state, conditional_params, measurement_cm
from domain.errors import InvalidInputError
from domain.steering import assess, classify_wns
from domain.symplectic import CanonicalParams
from domain.tmst import (
    TmstSpec,
    nonclassical_boundary,
    tmst_params,
    tmst_squeezing_threshold,
    tmst_steerable,
    triangoloid_point,
    triangoloid_sample,
    triangoloid_vertex,
    vertex_lambda,
)


def test_tmst_params_of_reference_states():
    canon = tmst_params(TmstSpec(n_a=0.75, n_b=0.75, r=1.2))
    assert canon.a == pytest.approx(6.946184, abs=1e-6)
    assert canon.b == pytest.approx(6.946184, abs=1e-6)
    assert canon.c1 == pytest.approx(6.832787, abs=1e-6)
    assert canon.c2 == -canon.c1

    noisy = tmst_params(TmstSpec(n_a=4.5, n_b=4.5, r=1.2))
    assert noisy.a == pytest.approx(27.784737, abs=1e-6)
    assert noisy.c1 == pytest.approx(27.331146, abs=1e-6)


def test_asymmetric_noise_splits_local_variances():
    canon = tmst_params(TmstSpec(n_a=2.0, n_b=0.5, r=0.0))
    assert (canon.a, canon.b, canon.c1) == pytest.approx((2.5, 1.0, 0.0))


@pytest.mark.parametrize(
    "spec,steerable,lam",
    [
        (TmstSpec(n_a=4.5, n_b=4.5, r=1.2), False, 0.89978),
        (TmstSpec(n_a=0.75, n_b=0.75, r=1.2), True, 0.224948),
        (TmstSpec(n_a=0.0, n_b=0.0, r=0.0), False, 0.5),
    ],
)
def test_universal_condition_and_vertex(spec, steerable, lam):
    assert tmst_steerable(spec) is steerable
    assert vertex_lambda(spec) == pytest.approx(lam, abs=1e-5)
    assert vertex_lambda(spec) == pytest.approx(classify_wns(tmst_params(spec))[0], abs=1e-12)


@pytest.mark.parametrize("n_a,n_b", [(0.0, 0.0), (0.75, 0.75), (4.5, 4.5), (2.0, 0.1), (0.1, 3.0)])
def test_squeezing_threshold_separates_verdicts(n_a, n_b):
    r_star = tmst_squeezing_threshold(n_a, n_b)
    assert tmst_steerable(TmstSpec(n_a=n_a, n_b=n_b, r=r_star + 1e-6))
    if r_star > 1e-6:
        assert not tmst_steerable(TmstSpec(n_a=n_a, n_b=n_b, r=r_star - 1e-6))


def test_squeezing_threshold_values():
    assert tmst_squeezing_threshold(0.0, 0.0) == 0.0
    assert tmst_squeezing_threshold(0.75, 0.75) == pytest.approx(0.5 * math.acosh(2.5))
    assert tmst_squeezing_threshold(4.5, 4.5) == pytest.approx(0.5 * math.acosh(10.0))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_a": -1.0, "n_b": 0.0, "r": 1.0},
        {"n_a": 0.0, "n_b": math.inf, "r": 1.0},
        {"n_a": 0.0, "n_b": 0.0, "r": 400.0},
        {"n_a": 0.0, "n_b": 0.0, "r": 60.0},
        {"n_a": 1e60, "n_b": 0.0, "r": 0.0},
    ],
)
def test_tmst_spec_validation(kwargs):
    with pytest.raises(InvalidInputError):
        TmstSpec(**kwargs)


def test_universal_condition_agrees_with_wns_on_a_grid():
    grid_n = np.linspace(0.0, 5.0, 30)
    grid_r = np.linspace(0.0, 2.0, 30)
    checked = 0
    for n_a in grid_n:
        for n_b in grid_n:
            threshold = 1.0 + 2.0 * n_a * (1.0 + 2.0 * n_b) / (1.0 + n_a + n_b)
            for r in grid_r:
                spec = TmstSpec(n_a=float(n_a), n_b=float(n_b), r=float(r))
                lam, wns = classify_wns(tmst_params(spec))
                if abs(lam - 0.5) < 1e-9 or abs(math.cosh(2.0 * r) - threshold) < 1e-9:
                    continue
                assert tmst_steerable(spec) is wns, spec
                checked += 1
    assert checked > 26000


def test_notions_coincide_for_random_tmsts():
    rng = np.random.default_rng(5)
    for n_a, n_b, r in zip(rng.uniform(0, 5, 1000), rng.uniform(0, 5, 1000), rng.uniform(0, 2, 1000), strict=True):
        spec = TmstSpec(n_a=float(n_a), n_b=float(n_b), r=float(r))
        lam, _ = classify_wns(tmst_params(spec))
        if abs(lam - 0.5) < 1e-4:
            continue
        report = assess(tmst_params(spec).to_state())
        assert report.wns == report.sns == report.epr_b_to_a, spec


@given(
    n_a=st.floats(min_value=0.0, max_value=5.0),
    n_b=st.floats(min_value=0.0, max_value=5.0),
    r=st.floats(min_value=0.0, max_value=2.0),
    mu=st.floats(min_value=1e-6, max_value=1.0),
    mu_s=st.floats(min_value=0.01, max_value=1.0),
    phi=st.floats(min_value=0.0, max_value=6.28),
)
@settings(max_examples=300, deadline=None)
def test_closed_forms_match_schur_complement(n_a, n_b, r, mu, mu_s, phi):
    canon = tmst_params(TmstSpec(n_a=n_a, n_b=n_b, r=r))
    point = triangoloid_point(canon, mu, mu_s)
    sigma_c = condition_on_b(canon.to_state(), measurement_cm(GeneralGaussian(mu=mu, mu_s=mu_s, phi=phi)))
    params = conditional_params(sigma_c)
    assert point.mu_c == pytest.approx(params.mu_c, abs=1e-9)
    assert point.mu_sc == pytest.approx(params.mu_sc, abs=1e-9)


# A rotated seed CM resolves its squeezed variance only to eps·(1 + κ_s)²/μ_s², so the
# smallest mu_s values are compared at phases where the seed CM is diagonal.
@given(
    n_a=st.floats(min_value=0.0, max_value=5.0),
    n_b=st.floats(min_value=0.0, max_value=5.0),
    r=st.floats(min_value=0.0, max_value=2.0),
    mu=st.floats(min_value=1e-6, max_value=1.0),
    mu_s=st.floats(min_value=1e-6, max_value=1.0),
    phi=st.sampled_from([0.0, math.pi]),
)
@settings(max_examples=300, deadline=None)
def test_closed_forms_match_schur_complement_for_nearly_ideal_quadratures(n_a, n_b, r, mu, mu_s, phi):
    canon = tmst_params(TmstSpec(n_a=n_a, n_b=n_b, r=r))
    point = triangoloid_point(canon, mu, mu_s)
    sigma_c = condition_on_b(canon.to_state(), measurement_cm(GeneralGaussian(mu=mu, mu_s=mu_s, phi=phi)))
    params = conditional_params(sigma_c)
    assert point.mu_c == pytest.approx(params.mu_c, abs=1e-9)
    assert point.mu_sc == pytest.approx(params.mu_sc, abs=1e-9)


def test_triangoloid_point_requires_tmst_form():
    with pytest.raises(InvalidInputError, match="c1 = −c2"):
        triangoloid_point(CanonicalParams(a=2.0, b=2.0, c1=1.0, c2=1.0), 0.5, 0.5)


@pytest.mark.parametrize("mu,mu_s", [(0.0, 0.5), (0.5, 0.0), (1.2, 0.5), (0.5, math.nan)])
def test_triangoloid_point_validates_measurement(mu, mu_s):
    with pytest.raises(InvalidInputError):
        triangoloid_point(tmst_params(TmstSpec(n_a=0.0, n_b=0.0, r=1.0)), mu, mu_s)


def test_vertex_row_is_the_homodyne_limit():
    spec = TmstSpec(n_a=0.75, n_b=0.75, r=1.2)
    canon = tmst_params(spec)
    vertex = triangoloid_vertex(spec)
    assert (vertex.mu, vertex.mu_s) == (1.0, 0.0)
    assert vertex.depth == pytest.approx(0.5 - 0.224948, abs=1e-5)
    near = triangoloid_point(canon, 1.0, 1e-7)
    assert near.mu_c == pytest.approx(vertex.mu_c, rel=1e-4)
    assert near.mu_sc == pytest.approx(vertex.mu_sc, rel=1e-4)


def test_triangoloid_of_steerable_state():
    points = triangoloid_sample(TmstSpec(n_a=0.75, n_b=0.75, r=1.2), 200)
    assert len(points) == 200**2 + 3 * 200 + 1
    assert any(p.depth > 0 for p in points)
    assert all(abs(p.mu_sc - 1.0) <= 1e-9 for p in points if p.mu_s == 1.0)
    assert points[-1].mu_s == 0.0
    assert all(0.0 < p.mu_c <= 1.0 and 0.0 < p.mu_sc <= 1.0 for p in points)


def test_triangoloid_of_noisy_state_has_no_nonclassical_rows():
    points = triangoloid_sample(TmstSpec(n_a=4.5, n_b=4.5, r=1.2), 200)
    assert len(points) == 200**2 + 3 * 200 + 1
    assert not any(p.depth > 0 for p in points)
    assert all(abs(p.mu_sc - 1.0) <= 1e-9 for p in points if p.mu_s == 1.0)


def test_triangoloid_row_order():
    grid_n = 4
    points = triangoloid_sample(TmstSpec(n_a=0.5, n_b=0.5, r=0.8), grid_n, mu_min=0.01, mu_s_min=0.01)
    block = grid_n * grid_n
    assert [p.mu for p in points[block : block + grid_n]] == [1.0] * grid_n
    assert [p.mu_s for p in points[block + grid_n : block + 2 * grid_n]] == [1.0] * grid_n
    assert [p.mu_s for p in points[block + 2 * grid_n : block + 3 * grid_n]] == pytest.approx([0.01] * grid_n)
    assert points[0].mu == pytest.approx(0.01) and points[0].mu_s == pytest.approx(0.01)
    assert points[1].mu == pytest.approx(0.01)


def test_pure_measurements_keep_tmsv_conditional_states_pure():
    points = triangoloid_sample(TmstSpec(n_a=0.0, n_b=0.0, r=1.0), 50)
    assert all(p.mu_c == pytest.approx(1.0, abs=1e-9) for p in points if p.mu == 1.0)


@pytest.mark.parametrize("grid_n", [1, 2001, 2.5, True])
def test_triangoloid_grid_bounds(grid_n):
    with pytest.raises(InvalidInputError):
        triangoloid_sample(TmstSpec(n_a=0.0, n_b=0.0, r=1.0), grid_n)


def test_triangoloid_floor_bounds():
    with pytest.raises(InvalidInputError):
        triangoloid_sample(TmstSpec(n_a=0.0, n_b=0.0, r=1.0), 10, mu_min=0.0)


@pytest.mark.parametrize("mu_c,expected", [(1.0, 1.0), (0.5, 0.8)])
def test_nonclassical_boundary(mu_c, expected):
    assert nonclassical_boundary(mu_c) == pytest.approx(expected)


def test_vertex_dominates_the_sampled_triangoloid():
    spec = TmstSpec(n_a=0.75, n_b=0.75, r=1.2)
    points = triangoloid_sample(spec, 60)
    assert points[-1].depth == max(p.depth for p in points)


@pytest.mark.parametrize("n_a,n_b", [(0.0, 0.0), (0.75, 0.75), (4.5, 1.0)])
def test_vertex_lambda_decreases_with_squeezing(n_a, n_b):
    lams = [vertex_lambda(TmstSpec(n_a=n_a, n_b=n_b, r=float(r))) for r in np.linspace(0.0, 2.0, 21)]
    assert all(later < earlier for earlier, later in zip(lams, lams[1:], strict=False))


@pytest.mark.parametrize("r", [9.0, 13.0, 20.0, 50.0])
def test_vertex_keeps_its_precision_at_large_squeezing(r):
    spec = TmstSpec(n_a=0.0, n_b=0.0, r=r)
    expected = 1.0 / (2.0 * math.cosh(2.0 * r))
    assert vertex_lambda(spec) == pytest.approx(expected, rel=1e-12)
    vertex = triangoloid_vertex(spec)
    assert vertex.mu_c == pytest.approx(1.0, abs=1e-12)
    assert vertex.depth == pytest.approx(0.5 - expected, abs=1e-15)


def test_vertex_of_noisy_strongly_squeezed_tmst():
    spec = TmstSpec(n_a=2.0, n_b=0.5, r=15.0)
    b = 3.5 * math.sinh(15.0) ** 2 + 1.0
    assert vertex_lambda(spec) == pytest.approx(2.5 / b, rel=1e-12)
    assert tmst_steerable(spec)


def test_triangoloid_at_large_squeezing_stays_finite():
    points = triangoloid_sample(TmstSpec(n_a=0.5, n_b=0.0, r=20.0), 10)
    assert len(points) == 10**2 + 3 * 10 + 1
    assert all(0.0 < p.mu_c <= 1.0 and 0.0 < p.mu_sc <= 1.0 for p in points)
    assert all(0.0 <= p.depth <= 0.5 for p in points)
    assert points[-1].depth == max(p.depth for p in points)


def test_boundary_sign_matches_conditional_nonclassicality():
    rng = np.random.default_rng(23)
    checked = signs = 0
    for _ in range(1000):
        spec = TmstSpec(n_a=float(rng.uniform(0, 1)), n_b=float(rng.uniform(0, 1)), r=float(rng.uniform(0, 1.5)))
        measurement = GeneralGaussian(
            mu=float(rng.uniform(0.01, 1.0)), mu_s=float(rng.uniform(0.01, 1.0)), phi=float(rng.uniform(0, 2 * math.pi))
        )
        conditional = condition_state(tmst_params(spec).to_state(), measurement)
        params = conditional.params
        margin = nonclassical_boundary(params.mu_c) - params.mu_sc
        if abs(margin) < 1e-9 or abs(0.5 - params.lambda_minus) < 1e-9:
            continue
        assert (margin > 0) == (params.lambda_minus < 0.5), (spec, measurement)
        checked += 1
        signs += int(margin > 0)
    assert checked > 990
    assert 0 < signs < checked
