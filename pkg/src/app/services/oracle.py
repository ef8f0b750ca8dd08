"""Brute-force validation of the analytic steering formulas.

The scan evaluates the least conditional eigenvalue over a grid of Gaussian
measurements on mode B; the sampler draws random canonical-form states for
property audits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from domain.conditioning import TWO_PI, GeneralGaussian
from domain.errors import InternalConsistencyError, InvalidInputError, UnphysicalStateError
from domain.steering import assess, classify_from_invariants, classify_sns, classify_wns, hierarchy_violations
from domain.symplectic import (
    CanonicalParams,
    GaussianState,
    apply_symplectic,
    canonical_params,
    check_physical,
    random_local_symplectic,
    symplectic_form,
    symplectic_invariants,
)
from settings import cfg, resolve_tol

MIN_A = 0.5
MAX_A = 20.0
TIE_TOL = 1e-12
INVARIANT_TOL = 1e-6
_MIN_BATCH = 64


@dataclass(frozen=True, slots=True)
class ScanResult:
    """Least conditional eigenvalue found on the grid and where it was reached."""

    best_lambda: float
    best_spec: GeneralGaussian
    grid_dims: tuple[int, int, int]
    monotone_in_mus: bool


@dataclass(frozen=True, slots=True)
class HierarchyViolation:
    index: int
    state: GaussianState
    violations: tuple[str, ...]


def _check_dim(value: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 2:
        raise InvalidInputError(f"{name} must be an integer >= 2, got {value!r}")
    return value


def scan_axes(n_mu: int, n_mus: int, n_phi: int, mus_min: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Grid axes: mu linear up to 1, mu_s logarithmic from mus_min to 1, phi uniform on [0, 2π)."""
    _check_dim(n_mu, "n_mu")
    _check_dim(n_mus, "n_mus")
    _check_dim(n_phi, "n_phi")
    if not math.isfinite(mus_min) or not 0.0 < mus_min < 1.0:
        raise InvalidInputError(f"mus_min must lie in (0, 1), got {mus_min}")
    return (
        np.linspace(1.0 / n_mu, 1.0, n_mu),
        np.geomspace(mus_min, 1.0, n_mus),
        np.linspace(0.0, TWO_PI, n_phi, endpoint=False),
    )


def _lambda_grid(state: GaussianState, mus: np.ndarray, mu_ss: np.ndarray, phis: np.ndarray) -> np.ndarray:
    """λ₋ of the Schur complement for every (mu, mu_s, phi), shape (n_mu, n_mus, n_phi)."""
    mu, mu_s, phi = np.meshgrid(mus, mu_ss, phis, indexing="ij")
    kappa = np.sqrt(1.0 - mu_s**2)
    scale = 1.0 / (2.0 * mu * mu_s)
    b = state.b_block
    m00 = b[0, 0] + scale * (1.0 + kappa * np.cos(phi))
    m11 = b[1, 1] + scale * (1.0 - kappa * np.cos(phi))
    m01 = b[0, 1] - scale * kappa * np.sin(phi)
    m10 = b[1, 0] - scale * kappa * np.sin(phi)
    det = m00 * m11 - m01 * m10
    inv = np.stack([np.stack([m11, -m01], axis=-1), np.stack([-m10, m00], axis=-1)], axis=-2) / det[..., None, None]
    c = state.c_block
    sigma = state.a_block - np.einsum("ij,...jk,lk->...il", c, inv, c)
    xx, yy = sigma[..., 0, 0], sigma[..., 1, 1]
    xy = 0.5 * (sigma[..., 0, 1] + sigma[..., 1, 0])
    return 0.5 * (xx + yy) - np.hypot(0.5 * (xx - yy), xy)


def brute_force_min_lambda(
    state: GaussianState,
    n_mu: int,
    n_mus: int,
    n_phi: int,
    *,
    mus_min: float | None = None,
    tol: float | None = None,
) -> ScanResult:
    """Exhaustive scan of λ₋ over Gaussian measurements on mode B.

    Ties are broken by the first grid index in (mu, mu_s, phi) row-major order.
    ``monotone_in_mus`` reports whether λ₋ never increases as mu_s decreases at
    the optimal (mu, phi).
    """
    mus_min = cfg.SCAN_MU_S_MIN if mus_min is None else mus_min
    mus, mu_ss, phis = scan_axes(n_mu, n_mus, n_phi, mus_min)
    if state.n_modes != 2:
        raise InvalidInputError("the scan requires a two-mode state")
    report = check_physical(state, tol)
    if not report.physical:
        raise UnphysicalStateError(report)

    lam = _lambda_grid(state, mus, mu_ss, phis)
    floor = float(lam.min())
    flat = int(np.flatnonzero(lam.ravel() <= floor + TIE_TOL)[0])
    i, j, k = np.unravel_index(flat, lam.shape)
    trace = lam[i, :, k]
    monotone = bool(np.all(np.diff(trace) >= -TIE_TOL * np.maximum(1.0, np.abs(trace[1:]))))
    best = GeneralGaussian(mu=float(mus[i]), mu_s=float(mu_ss[j]), phi=float(phis[k]))
    logger.debug(f"Scan {lam.shape}: best λ₋ {float(lam[i, j, k]):.9g} at {best}")
    return ScanResult(
        best_lambda=float(lam[i, j, k]),
        best_spec=best,
        grid_dims=(n_mu, n_mus, n_phi),
        monotone_in_mus=monotone,
    )


def _canonical_cms(a, b, c1, c2) -> np.ndarray:
    n = a.shape[0]
    cm = np.zeros((n, 4, 4))
    cm[:, 0, 0] = cm[:, 1, 1] = a
    cm[:, 2, 2] = cm[:, 3, 3] = b
    cm[:, 0, 2] = cm[:, 2, 0] = c1
    cm[:, 1, 3] = cm[:, 3, 1] = c2
    return cm


def sample_physical_states(seed: int, count: int) -> list[GaussianState]:
    """Random canonical-form states, a, b ∈ [1/2, 20] and |c_i| ≤ √(ab), accepted by the uncertainty relation."""
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise InvalidInputError(f"count must be a positive integer, got {count!r}")
    rng = np.random.default_rng(seed)
    omega = 0.5j * symplectic_form(2)
    accepted: list[CanonicalParams] = []
    drawn = 0
    while len(accepted) < count:
        size = max(_MIN_BATCH, 2 * (count - len(accepted)))
        a = rng.uniform(MIN_A, MAX_A, size)
        b = rng.uniform(MIN_A, MAX_A, size)
        bound = np.sqrt(a * b)
        c1 = rng.uniform(-bound, bound)
        c2 = rng.uniform(-bound, bound)
        least = np.linalg.eigvalsh(_canonical_cms(a, b, c1, c2) + omega)[:, 0]
        drawn += size
        for idx in np.flatnonzero(least >= 0.0):
            accepted.append(CanonicalParams(a=float(a[idx]), b=float(b[idx]), c1=float(c1[idx]), c2=float(c2[idx])))
            if len(accepted) == count:
                break
    logger.debug(f"Sampled {count} physical states out of {drawn} draws (seed {seed})")
    return [canon.to_state() for canon in accepted]


def find_hierarchy_violations(
    states: list[GaussianState],
    tol: float | None = None,
    *,
    cross_check: bool | None = None,
) -> list[HierarchyViolation]:
    """States breaking SNS ⇒ WNS, SNS ⇒ EPR(B→A) or EPR(B→A) ⇒ entangled.

    Marginal states are not exempted here; a failed EPR cross-check counts as
    a violation too.
    """
    tol = resolve_tol(tol)
    found = []
    for index, state in enumerate(states):
        try:
            broken = tuple(hierarchy_violations(assess(state, tol, cross_check=cross_check)))
        except InternalConsistencyError as exc:
            broken = (str(exc),)
        if broken:
            found.append(HierarchyViolation(index=index, state=state, violations=broken))
    return found


def audit_hierarchy(
    states: list[GaussianState],
    tol: float | None = None,
    *,
    cross_check: bool | None = None,
) -> int:
    """Number of states violating the steering hierarchy; 0 on healthy builds."""
    violations = find_hierarchy_violations(states, tol, cross_check=cross_check)
    logger.info(f"Hierarchy audit: {len(violations)} violations over {len(states)} states")
    return len(violations)


def invariant_mismatches(states: list[GaussianState], tol: float | None = None, *, seed: int = 0) -> list[int]:
    """Indices of states whose invariant-form λ values differ from the canonical-form ones.

    Each state is checked as given and again after the random local symplectic
    drawn with seed ``seed + index``.
    """
    tol = resolve_tol(tol)
    mismatched = []
    for index, state in enumerate(states):
        canon = canonical_params(symplectic_invariants(state), tol)
        lam_wns, _ = classify_wns(canon)
        lam_sns, _ = classify_sns(canon)
        limit = INVARIANT_TOL * max(1.0, abs(lam_sns))
        s_a, s_b = random_local_symplectic(seed + index)
        for checked in (state, apply_symplectic(state, s_a, s_b)):
            inv_wns, inv_sns = classify_from_invariants(symplectic_invariants(checked), tol)
            if abs(inv_wns - lam_wns) > limit or abs(inv_sns - lam_sns) > limit:
                mismatched.append(index)
                break
    logger.info(f"Invariant check: {len(mismatched)} mismatches over {len(states)} states")
    return mismatched
