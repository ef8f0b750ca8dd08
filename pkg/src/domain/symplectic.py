"""Covariance-matrix data model, physicality checks and symplectic invariants.

Quadratures are ordered (x1, p1, x2, p2) and the vacuum has variance 1/2, so a
single-mode state is P-nonclassical exactly when its covariance matrix has an
eigenvalue below 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from domain.errors import InconsistentInvariantsError, InvalidInputError
from settings import resolve_tol

OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
VACUUM_VARIANCE = 0.5
UNIMODULAR_TOL = 1e-9
MAX_RANDOM_SQUEEZING = 2.0


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal standard symplectic form for ``n_modes`` modes."""
    return np.kron(np.eye(n_modes), OMEGA_1)


def _as_matrix(values, shape: tuple[int, int], name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.shape != shape:
        raise InvalidInputError(f"{name} must have shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} must be finite")
    return arr


@dataclass(frozen=True, slots=True, eq=False)
class GaussianState:
    """Gaussian state of one or two modes given by its mean vector and covariance matrix."""

    n_modes: int
    mean: np.ndarray
    cm: np.ndarray

    def __post_init__(self) -> None:
        """Validate mode count, shapes and finiteness; freeze the arrays."""
        if self.n_modes not in (1, 2):
            raise InvalidInputError("n_modes must be 1 or 2")
        dim = 2 * self.n_modes
        cm = _as_matrix(self.cm, (dim, dim), "cm")
        mean = np.array(self.mean, dtype=float)
        if mean.shape != (dim,):
            raise InvalidInputError(f"mean must have length {dim}, got shape {mean.shape}")
        if not np.all(np.isfinite(mean)):
            raise InvalidInputError("mean must be finite")
        cm.setflags(write=False)
        mean.setflags(write=False)
        object.__setattr__(self, "cm", cm)
        object.__setattr__(self, "mean", mean)

    @staticmethod
    def from_cm(cm, mean=None) -> GaussianState:
        """Build a state from a covariance matrix, inferring the number of modes."""
        arr = np.array(cm, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] not in (2, 4):
            raise InvalidInputError(f"cm must be 2x2 or 4x4, got shape {arr.shape}")
        n_modes = arr.shape[0] // 2
        return GaussianState(n_modes=n_modes, mean=np.zeros(2 * n_modes) if mean is None else mean, cm=arr)

    @staticmethod
    def vacuum(n_modes: int = 2) -> GaussianState:
        """Vacuum state, covariance matrix (1/2)·identity."""
        return GaussianState(n_modes=n_modes, mean=np.zeros(2 * n_modes), cm=VACUUM_VARIANCE * np.eye(2 * n_modes))

    @property
    def a_block(self) -> np.ndarray:
        return self.cm[:2, :2]

    @property
    def b_block(self) -> np.ndarray:
        self._require_two_modes()
        return self.cm[2:, 2:]

    @property
    def c_block(self) -> np.ndarray:
        self._require_two_modes()
        return self.cm[:2, 2:]

    @property
    def mean_a(self) -> np.ndarray:
        return self.mean[:2]

    @property
    def mean_b(self) -> np.ndarray:
        self._require_two_modes()
        return self.mean[2:]

    def swapped(self) -> GaussianState:
        """Same state with the roles of modes A and B exchanged."""
        self._require_two_modes()
        perm = [2, 3, 0, 1]
        return GaussianState(n_modes=2, mean=self.mean[perm], cm=self.cm[np.ix_(perm, perm)])

    def _require_two_modes(self) -> None:
        if self.n_modes != 2:
            raise InvalidInputError("operation requires a two-mode state")


@dataclass(frozen=True, slots=True)
class CanonicalParams:
    """Parameters (a, b, c1, c2) of a canonical-form two-mode covariance matrix."""

    a: float
    b: float
    c1: float
    c2: float

    def __post_init__(self) -> None:
        """Validate that all parameters are finite."""
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c1, self.c2)):
            raise InvalidInputError("canonical parameters must be finite")

    @property
    def c(self) -> float:
        """Largest correlation magnitude."""
        return max(abs(self.c1), abs(self.c2))

    @property
    def c_prime(self) -> float:
        """Smallest correlation magnitude."""
        return min(abs(self.c1), abs(self.c2))

    def to_state(self, mean=None) -> GaussianState:
        """Two-mode state whose CM is diag(a, a, b, b) with correlation block diag(c1, c2)."""
        cm = np.array(
            [
                [self.a, 0.0, self.c1, 0.0],
                [0.0, self.a, 0.0, self.c2],
                [self.c1, 0.0, self.b, 0.0],
                [0.0, self.c2, 0.0, self.b],
            ]
        )
        return GaussianState(n_modes=2, mean=np.zeros(4) if mean is None else mean, cm=cm)


@dataclass(frozen=True, slots=True)
class SymplecticInvariants:
    """Local symplectic invariants: det A, det B, det C and det of the full CM."""

    I1: float  # noqa: N815
    I2: float  # noqa: N815
    I3: float  # noqa: N815
    I4: float  # noqa: N815

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.I1, self.I2, self.I3, self.I4)


@dataclass(frozen=True, slots=True)
class PhysicalityReport:
    """Outcome of the symmetry and uncertainty-relation checks on a covariance matrix."""

    symmetric: bool
    ur_satisfied: bool
    min_ur_eigenvalue: float
    tol: float = field(default=1e-9, repr=False)

    @property
    def physical(self) -> bool:
        return self.symmetric and self.ur_satisfied


def check_physical(state: GaussianState, tol: float | None = None) -> PhysicalityReport:
    """Check symmetry and the uncertainty relation cm + (i/2)Ω ≥ 0.

    The least eigenvalue is taken of the Hermitian part, so an asymmetric input
    still gets a meaningful eigenvalue alongside ``symmetric=False``.
    """
    tol = resolve_tol(tol)
    cm = state.cm
    symmetric = bool(np.allclose(cm, cm.T, rtol=0.0, atol=tol))
    hermitian = 0.5 * (cm + cm.T) + 0.5j * symplectic_form(state.n_modes)
    min_eig = float(np.linalg.eigvalsh(hermitian)[0])
    return PhysicalityReport(symmetric=symmetric, ur_satisfied=min_eig >= -tol, min_ur_eigenvalue=min_eig, tol=tol)


def symplectic_invariants(state: GaussianState) -> SymplecticInvariants:
    """Block determinants I1 = det A, I2 = det B, I3 = det C and I4 = det σ."""
    if state.n_modes != 2:
        raise InvalidInputError("symplectic invariants require a two-mode state")
    return SymplecticInvariants(
        I1=float(np.linalg.det(state.a_block)),
        I2=float(np.linalg.det(state.b_block)),
        I3=float(np.linalg.det(state.c_block)),
        I4=float(np.linalg.det(state.cm)),
    )


def canonical_params(inv: SymplecticInvariants, tol: float | None = None) -> CanonicalParams:
    """Recover the canonical form from the invariants.

    c1² and c2² are the roots of y² − t·y + I3² with t = ((ab)² + I3² − I4)/(ab).
    Output convention: |c1| ≥ |c2|, c1 ≥ 0, c2 carries the sign of I3.
    """
    tol = resolve_tol(tol)
    if inv.I1 <= 0 or inv.I2 <= 0:
        raise InconsistentInvariantsError("I1 and I2 must be positive")
    a = math.sqrt(inv.I1)
    b = math.sqrt(inv.I2)
    ab = a * b
    t = (ab * ab + inv.I3 * inv.I3 - inv.I4) / ab
    disc = t * t - 4.0 * inv.I3 * inv.I3
    if disc < 0:
        if disc < -tol * max(1.0, t * t):
            raise InconsistentInvariantsError(f"negative discriminant {disc:.3e} for invariants {inv.as_tuple()}")
        logger.debug(f"Clamping discriminant {disc:.3e} to zero")
        disc = 0.0
    y_big = max(0.0, 0.5 * (t + math.sqrt(disc)))
    y_small = inv.I3 * inv.I3 / y_big if y_big > 0 else 0.0
    c1 = math.sqrt(y_big)
    c2 = math.copysign(math.sqrt(y_small), inv.I3) if inv.I3 != 0 else 0.0
    return CanonicalParams(a=a, b=b, c1=c1, c2=c2)


def min_cm_eigenvalue(cm) -> float:
    """Least eigenvalue of a symmetric 2×2 matrix in closed form."""
    m = _as_matrix(cm, (2, 2), "cm")
    xx, yy = m[0, 0], m[1, 1]
    xy = 0.5 * (m[0, 1] + m[1, 0])
    return float(0.5 * (xx + yy) - math.hypot(0.5 * (xx - yy), xy))


def nonclassical_depth(cm, tol: float | None = None) -> float:
    """Nonclassical depth max(0, 1/2 − λ₋) of a single-mode Gaussian state.

    The s-ordered kernel shifts the CM by −(s/2)·identity, so the singularity
    threshold is s_m = 2λ₋ and the depth is (1 − s_m)/2.
    """
    state = GaussianState.from_cm(_as_matrix(cm, (2, 2), "cm"))
    report = check_physical(state, tol)
    if not report.physical:
        raise InvalidInputError(f"unphysical single-mode CM (least UR eigenvalue {report.min_ur_eigenvalue:.3e})")
    return max(0.0, VACUUM_VARIANCE - min_cm_eigenvalue(state.cm))


def _check_unimodular(s: np.ndarray, name: str) -> None:
    if abs(np.linalg.det(s) - 1.0) > UNIMODULAR_TOL:
        raise InvalidInputError(f"{name} must have unit determinant, got {np.linalg.det(s):.12g}")


def apply_symplectic(state: GaussianState, s_a, s_b) -> GaussianState:
    """Apply the local transformation S_A ⊕ S_B to a two-mode state."""
    if state.n_modes != 2:
        raise InvalidInputError("local symplectics act on two-mode states")
    sa = _as_matrix(s_a, (2, 2), "s_a")
    sb = _as_matrix(s_b, (2, 2), "s_b")
    _check_unimodular(sa, "s_a")
    _check_unimodular(sb, "s_b")
    s = np.block([[sa, np.zeros((2, 2))], [np.zeros((2, 2)), sb]])
    cm = s @ state.cm @ s.T
    return GaussianState(n_modes=2, mean=s @ state.mean, cm=0.5 * (cm + cm.T))


def _rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def random_local_symplectic(seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic pair of unimodular 2×2 matrices, rotation·squeezer·rotation each.

    Squeezing is drawn from [0, 2] to keep conditioning bounded.
    """
    rng = np.random.default_rng(seed)
    pair = []
    for _ in range(2):
        theta1, theta2 = rng.uniform(0.0, 2 * math.pi, size=2)
        r = rng.uniform(0.0, MAX_RANDOM_SQUEEZING)
        pair.append(_rotation(theta1) @ np.diag([math.exp(r), math.exp(-r)]) @ _rotation(theta2))
    return pair[0], pair[1]


def _symplectic_pair(delta: float, det: float) -> tuple[float, float]:
    radicand = max(0.0, delta * delta - 4.0 * det)
    nu_plus_sq = 0.5 * (delta + math.sqrt(radicand))
    nu_minus_sq = det / nu_plus_sq if nu_plus_sq > 0 else 0.0
    return math.sqrt(max(0.0, nu_minus_sq)), math.sqrt(max(0.0, nu_plus_sq))


def symplectic_spectrum(state: GaussianState) -> tuple[float, float]:
    """Symplectic eigenvalues (ν₋, ν₊) of a two-mode CM from Δ = I1 + I2 + 2·I3 and I4."""
    inv = symplectic_invariants(state)
    return _symplectic_pair(inv.I1 + inv.I2 + 2.0 * inv.I3, inv.I4)


def ppt_symplectic_min(state: GaussianState) -> float:
    """Least symplectic eigenvalue of the partially transposed CM (Δ~ = I1 + I2 − 2·I3)."""
    inv = symplectic_invariants(state)
    return _symplectic_pair(inv.I1 + inv.I2 - 2.0 * inv.I3, inv.I4)[0]
