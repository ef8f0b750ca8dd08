"""Gaussian measurements on mode B and the conditional state they leave on mode A.

The conditional covariance matrix is the Schur complement A − C (B + σ_M)⁻¹ Cᵀ
and never depends on the measurement outcome; only the conditional mean does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from domain.errors import InvalidInputError, NumericalDegeneracyError, UnsupportedVariantError
from domain.symplectic import (
    VACUUM_VARIANCE,
    CanonicalParams,
    GaussianState,
    check_physical,
    min_cm_eigenvalue,
)
from infra.enumerators.steering import QuadratureBranch
from settings import resolve_tol

TWO_PI = 2.0 * math.pi
ISOTROPY_TOL = 1e-12
_SINGULAR_TOL = 1e-14


def _check_phase(phi: float) -> float:
    if not math.isfinite(phi) or not 0.0 <= phi < TWO_PI:
        raise InvalidInputError(f"phi must lie in [0, 2π), got {phi}")
    return float(phi)


def _check_unit_interval(value: float, name: str) -> float:
    if not math.isfinite(value) or not 0.0 < value <= 1.0:
        raise InvalidInputError(f"{name} must lie in (0, 1], got {value}")
    return float(value)


@dataclass(frozen=True, slots=True)
class GeneralGaussian:
    """Gaussian POVM with seed-state purity ``mu``, squeezing parameter ``mu_s`` and phase ``phi``."""

    mu: float
    mu_s: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        """Validate that mu, mu_s ∈ (0, 1] and phi ∈ [0, 2π)."""
        _check_unit_interval(self.mu, "mu")
        _check_unit_interval(self.mu_s, "mu_s")
        _check_phase(self.phi)

    @staticmethod
    def from_squeezing(mu: float, r_m: float, phi: float = 0.0) -> GeneralGaussian:
        """Build the POVM from the squeezing parameter r_m, mu_s = 1/(1 + 2 sinh² r_m)."""
        if not math.isfinite(r_m) or r_m < 0:
            raise InvalidInputError(f"r_m must be a finite non-negative number, got {r_m}")
        return GeneralGaussian(mu=mu, mu_s=1.0 / (1.0 + 2.0 * math.sinh(r_m) ** 2), phi=phi)

    @property
    def kappa_s(self) -> float:
        return math.sqrt(1.0 - self.mu_s * self.mu_s)

    @property
    def squeezing(self) -> float:
        """Squeezing parameter r_m of the seed state."""
        return math.asinh(math.sqrt(0.5 * (1.0 / self.mu_s - 1.0)))


@dataclass(frozen=True, slots=True)
class IdealQuadrature:
    """Homodyne detection, the mu_s → 0 limit of GeneralGaussian at fixed phase."""

    phi: float = 0.0

    def __post_init__(self) -> None:
        """Validate that phi ∈ [0, 2π)."""
        _check_phase(self.phi)


MeasurementSpec = GeneralGaussian | IdealQuadrature


@dataclass(frozen=True, slots=True)
class ConditionalParams:
    """Purity ``mu_c``, squeezing parameter ``mu_sc`` and phase ``phi_c`` of a single-mode CM."""

    mu_c: float
    mu_sc: float
    phi_c: float

    @property
    def kappa_sc(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.mu_sc * self.mu_sc))

    @property
    def lambda_minus(self) -> float:
        # (1 − κ)/(2 μ_c μ_sc) rewritten as μ_sc / (2 μ_c (1 + κ)) to avoid cancellation
        return self.mu_sc / (2.0 * self.mu_c * (1.0 + self.kappa_sc))

    @property
    def lambda_plus(self) -> float:
        return (1.0 + self.kappa_sc) / (2.0 * self.mu_c * self.mu_sc)

    @property
    def depth(self) -> float:
        return max(0.0, VACUUM_VARIANCE - self.lambda_minus)

    def to_cm(self) -> np.ndarray:
        """Rebuild the covariance matrix from its parameters."""
        k = self.kappa_sc
        cos_phi, sin_phi = math.cos(self.phi_c), math.sin(self.phi_c)
        return np.array([[1.0 + k * cos_phi, -k * sin_phi], [-k * sin_phi, 1.0 - k * cos_phi]]) / (
            2.0 * self.mu_c * self.mu_sc
        )


@dataclass(frozen=True, slots=True)
class ConditionalState:
    """Conditional state of mode A together with its summary numbers."""

    cm: np.ndarray
    params: ConditionalParams
    lambda_minus: float
    depth: float

    @property
    def nonclassical(self) -> bool:
        return self.depth > 0.0


def measurement_cm(spec: MeasurementSpec) -> np.ndarray:
    """Covariance matrix σ_M of the POVM seed state; det σ_M = 1/(4μ²)."""
    if isinstance(spec, IdealQuadrature):
        raise UnsupportedVariantError("ideal quadratures have no finite CM, use condition_quadrature")
    k = spec.kappa_s
    # 1 ± κ cos φ = (1 − κ) + 2κ cos²(φ/2) or 2κ sin²(φ/2), with 1 − κ = μ_s²/(1 + κ)
    one_minus_k = spec.mu_s * spec.mu_s / (1.0 + k)
    xx = one_minus_k + 2.0 * k * math.cos(0.5 * spec.phi) ** 2
    pp = one_minus_k + 2.0 * k * math.sin(0.5 * spec.phi) ** 2
    xp = -k * math.sin(spec.phi)
    return np.array([[xx, xp], [xp, pp]]) / (2.0 * spec.mu * spec.mu_s)


def _inverse_2x2(m: np.ndarray) -> np.ndarray:
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    scale = max(abs(m[0, 0]), abs(m[1, 1]), abs(m[0, 1]), abs(m[1, 0]), 1.0)
    if not math.isfinite(det) or det <= _SINGULAR_TOL * scale * scale:
        raise NumericalDegeneracyError(f"B + σ_M is singular (det = {det:.3e})")
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / det


def _meas_matrix(meas_cm) -> np.ndarray:
    m = np.array(meas_cm, dtype=float)
    if m.shape != (2, 2) or not np.all(np.isfinite(m)):
        raise InvalidInputError(f"measurement CM must be a finite 2x2 matrix, got shape {m.shape}")
    return m


def _two_mode(state: GaussianState) -> GaussianState:
    if state.n_modes != 2:
        raise InvalidInputError("conditioning requires a two-mode state")
    return state


def condition_on_b(state: GaussianState, meas_cm) -> np.ndarray:
    """Conditional CM of mode A, A − C (B + σ_M)⁻¹ Cᵀ; independent of the outcome."""
    state = _two_mode(state)
    c = state.c_block
    inv = _inverse_2x2(state.b_block + _meas_matrix(meas_cm))
    sigma_c = state.a_block - c @ inv @ c.T
    return 0.5 * (sigma_c + sigma_c.T)


def conditional_mean(state: GaussianState, meas_cm, outcome) -> np.ndarray:
    """Conditional mean of mode A, mean_A + C (B + σ_M)⁻¹ (outcome − mean_B)."""
    state = _two_mode(state)
    r = np.array(outcome, dtype=float)
    if r.shape != (2,) or not np.all(np.isfinite(r)):
        raise InvalidInputError("outcome must be a finite 2-vector")
    inv = _inverse_2x2(state.b_block + _meas_matrix(meas_cm))
    return state.mean_a + state.c_block @ inv @ (r - state.mean_b)


def condition_quadrature(canon: CanonicalParams, which: QuadratureBranch) -> np.ndarray:
    """Exact homodyne limit of condition_on_b for a canonical-form state."""
    if canon.b <= 0:
        raise InvalidInputError("b must be positive")
    match QuadratureBranch(which):
        case QuadratureBranch.USES_C1:
            return np.diag([canon.a - canon.c1**2 / canon.b, canon.a])
        case QuadratureBranch.USES_C2:
            return np.diag([canon.a, canon.a - canon.c2**2 / canon.b])


def condition_ideal_quadrature(state: GaussianState, phi: float) -> np.ndarray:
    """Homodyne limit of condition_on_b for an arbitrary two-mode state.

    As mu_s → 0 the seed CM diverges along u = (cos φ/2, −sin φ/2) and vanishes
    along w = (sin φ/2, cos φ/2), leaving A − (C w)(C w)ᵀ / (wᵀ B w).
    """
    state = _two_mode(state)
    _check_phase(phi)
    w = np.array([math.sin(0.5 * phi), math.cos(0.5 * phi)])
    denom = float(w @ state.b_block @ w)
    if denom <= 0:
        raise NumericalDegeneracyError("measured quadrature of mode B has non-positive variance")
    cw = state.c_block @ w
    sigma_c = state.a_block - np.outer(cw, cw) / denom
    return 0.5 * (sigma_c + sigma_c.T)


def conditional_params(cm, tol: float | None = None) -> ConditionalParams:
    """Extract (mu_c, mu_sc, phi_c) from det σ = (2μ_c)⁻² and tr σ = (μ_c μ_sc)⁻¹.

    phi_c is reported in [0, 2π) and set to 0 for isotropic CMs.
    """
    tol = resolve_tol(tol)
    state = GaussianState.from_cm(cm)
    if state.n_modes != 1:
        raise InvalidInputError("conditional_params expects a 2x2 CM")
    report = check_physical(state, tol)
    if not report.physical:
        raise InvalidInputError(f"unphysical conditional CM (least UR eigenvalue {report.min_ur_eigenvalue:.3e})")
    m = state.cm
    xx, yy = m[0, 0], m[1, 1]
    xy = 0.5 * (m[0, 1] + m[1, 0])
    det = xx * yy - xy * xy
    mu_c = min(1.0, 1.0 / (2.0 * math.sqrt(det)))
    mu_sc = min(1.0, 1.0 / (mu_c * (xx + yy)))
    anisotropy = mu_c * mu_sc * math.hypot(xx - yy, 2.0 * xy)
    phi_c = 0.0 if anisotropy < ISOTROPY_TOL else math.atan2(-2.0 * xy, xx - yy) % TWO_PI
    return ConditionalParams(mu_c=mu_c, mu_sc=mu_sc, phi_c=phi_c)


def _conditional_cm(state: GaussianState, spec: MeasurementSpec) -> np.ndarray:
    match spec:
        case GeneralGaussian():
            return condition_on_b(state, measurement_cm(spec))
        case IdealQuadrature(phi=phi):
            return condition_ideal_quadrature(state, phi)
    raise UnsupportedVariantError(f"unknown measurement {spec!r}")


def condition_state(state: GaussianState, spec: MeasurementSpec, tol: float | None = None) -> ConditionalState:
    """Conditional state of mode A after measuring mode B with ``spec``."""
    sigma_c = _conditional_cm(state, spec)
    lam = min_cm_eigenvalue(sigma_c)
    return ConditionalState(
        cm=sigma_c,
        params=conditional_params(sigma_c, tol),
        lambda_minus=lam,
        depth=max(0.0, VACUUM_VARIANCE - lam),
    )
