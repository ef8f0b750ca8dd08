"""Two-mode squeezed thermal states and their triangoloids.

A triangoloid is the region of conditional (mu_c, mu_sc) pairs mode A can be
left in by Gaussian measurements on mode B. Its lower vertex, reached by
homodyne detection, decides whether the TMST is steerable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from domain.errors import InvalidInputError, NumericalDegeneracyError
from domain.symplectic import VACUUM_VARIANCE, CanonicalParams
from settings import cfg

DEGENERACY_TOL = 1e-9
MAX_GRID = 2000
MAX_VARIANCE = 1e50


@dataclass(frozen=True, slots=True)
class TmstSpec:
    """Mean thermal photons ``n_a``, ``n_b`` and two-mode squeezing ``r``."""

    n_a: float
    n_b: float
    r: float

    def __post_init__(self) -> None:
        """Validate that all parameters are finite and non-negative and the local variances representable."""
        for name in ("n_a", "n_b", "r"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvalidInputError(f"{name} must be a finite non-negative number, got {value}")
        try:
            variance = _squeezed_part(self) + max(self.n_a, self.n_b) + VACUUM_VARIANCE
        except OverflowError:
            variance = math.inf
        if not variance <= MAX_VARIANCE:
            raise InvalidInputError(
                f"TMST({self.n_a}, {self.n_b}, {self.r}) has local variances above {MAX_VARIANCE:g}"
            )


@dataclass(frozen=True, slots=True)
class TriangoloidPoint:
    """One conditional state of a triangoloid; ``mu_s = 0`` marks the homodyne vertex."""

    mu: float
    mu_s: float
    mu_c: float
    mu_sc: float
    depth: float


def _squeezed_part(spec: TmstSpec) -> float:
    # n·sinh²r, added by the squeezing to both local variances
    return (1.0 + spec.n_a + spec.n_b) * math.sinh(spec.r) ** 2


def _excess(spec: TmstSpec) -> float:
    # ab − c², exactly (N_A + 1/2)(N_B + 1/2)
    return (spec.n_a + VACUUM_VARIANCE) * (spec.n_b + VACUUM_VARIANCE)


def tmst_params(spec: TmstSpec) -> CanonicalParams:
    """Canonical form of a TMST: a/b = n·cosh(2r)/2 ± (N_A − N_B)/2, c1 = −c2 = n·sinh(2r)/2.

    The local variances are evaluated as n·sinh²r + N + 1/2.
    """
    squeezed = _squeezed_part(spec)
    c = 0.5 * (1.0 + spec.n_a + spec.n_b) * math.sinh(2.0 * spec.r)
    return CanonicalParams(
        a=squeezed + spec.n_a + VACUUM_VARIANCE,
        b=squeezed + spec.n_b + VACUUM_VARIANCE,
        c1=c,
        c2=-c,
    )


def tmst_steerable(spec: TmstSpec) -> bool:
    """Universal steerability condition cosh 2r > 1 + 2 N_A (1 + 2 N_B)/(1 + N_A + N_B)."""
    return math.cosh(2.0 * spec.r) > _threshold_cosh(spec.n_a, spec.n_b)


def _threshold_cosh(n_a: float, n_b: float) -> float:
    return 1.0 + 2.0 * n_a * (1.0 + 2.0 * n_b) / (1.0 + n_a + n_b)


def tmst_squeezing_threshold(n_a: float, n_b: float) -> float:
    """Least two-mode squeezing above which a TMST with these thermal photons is steerable B → A."""
    TmstSpec(n_a=n_a, n_b=n_b, r=0.0)
    return 0.5 * math.acosh(_threshold_cosh(n_a, n_b))


def vertex_lambda(spec: TmstSpec) -> float:
    """Least conditional eigenvalue (ab − c²)/b, reached at the homodyne vertex."""
    return _excess(spec) / tmst_params(spec).b


def _check_tmst_form(canon: CanonicalParams) -> None:
    if abs(canon.c1 + canon.c2) > DEGENERACY_TOL * max(1.0, abs(canon.c1)):
        raise InvalidInputError("triangoloid closed forms require c1 = −c2")


def _closed_forms(a: float, b: float, excess: float, mu, mu_s) -> tuple[np.ndarray, np.ndarray]:
    """Conditional (mu_c, mu_sc) for measurement purities ``mu`` and squeezing ``mu_s``.

    With δ = 1/(2μμ_s) the seed variances of the measurement are b + δ(1 ∓ κ_s),
    and every factor below is a sum of positive terms.
    """
    kappa_s = np.sqrt(1.0 - mu_s * mu_s)
    delta = 1.0 / (2.0 * mu * mu_s)
    delta_minus = mu_s / (2.0 * mu * (1.0 + kappa_s))
    delta_plus = (1.0 + kappa_s) * delta
    alpha_minus, alpha_plus = b + delta_minus, b + delta_plus
    x_minus, x_plus = excess + a * delta_minus, excess + a * delta_plus
    denom = b * excess + delta * (a * b + excess) + a / (4.0 * mu * mu)
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        mu_c = 0.5 * np.sqrt(alpha_minus / x_minus) * np.sqrt(alpha_plus / x_plus)
        mu_sc = np.sqrt(alpha_minus * x_minus) * np.sqrt(alpha_plus * x_plus) / denom
    if not (np.all(np.isfinite(mu_c)) and np.all(np.isfinite(mu_sc)) and np.all(mu_c > 0) and np.all(mu_sc > 0)):
        raise NumericalDegeneracyError(f"degenerate triangoloid point (excess={excess:.3e})")
    return np.minimum(1.0, mu_c), np.minimum(1.0, mu_sc)


def triangoloid_point(canon: CanonicalParams, mu: float, mu_s: float) -> TriangoloidPoint:
    """Conditional (mu_c, mu_sc) of a TMST in closed form, independent of the measurement phase."""
    _check_tmst_form(canon)
    for name, value in (("mu", mu), ("mu_s", mu_s)):
        if not math.isfinite(value) or not 0.0 < value <= 1.0:
            raise InvalidInputError(f"{name} must lie in (0, 1], got {value}")
    excess = canon.a * canon.b - canon.c**2
    mu_c, mu_sc = _closed_forms(canon.a, canon.b, excess, mu, mu_s)
    return _point(mu, mu_s, float(mu_c), float(mu_sc))


def _point(mu: float, mu_s: float, mu_c: float, mu_sc: float) -> TriangoloidPoint:
    kappa_sc = math.sqrt(max(0.0, 1.0 - mu_sc * mu_sc))
    lam = mu_sc / (2.0 * mu_c * (1.0 + kappa_sc))
    return TriangoloidPoint(mu=mu, mu_s=mu_s, mu_c=mu_c, mu_sc=mu_sc, depth=max(0.0, VACUUM_VARIANCE - lam))


def triangoloid_vertex(spec: TmstSpec) -> TriangoloidPoint:
    """Exact homodyne vertex, reported with mu = 1 and mu_s = 0.

    The conditional CM there is diag((ab − c²)/b, a).
    """
    a = tmst_params(spec).a
    lam = vertex_lambda(spec)
    mu_c = min(1.0, 0.5 / math.sqrt(lam * a))
    mu_sc = min(1.0, 1.0 / (mu_c * (lam + a)))
    return _point(1.0, 0.0, mu_c, mu_sc)


def _sample_grid(spec: TmstSpec, mus: np.ndarray, mu_ss: np.ndarray) -> list[TriangoloidPoint]:
    """Vectorized closed forms over the outer grid mus × mu_ss, row-major in mu."""
    canon = tmst_params(spec)
    mu_g, mu_s_g = np.meshgrid(mus, mu_ss, indexing="ij")
    mu_c, mu_sc = _closed_forms(canon.a, canon.b, _excess(spec), mu_g, mu_s_g)
    kappa_sc = np.sqrt(np.maximum(0.0, 1.0 - mu_sc**2))
    depth = np.maximum(0.0, VACUUM_VARIANCE - mu_sc / (2.0 * mu_c * (1.0 + kappa_sc)))
    return [
        TriangoloidPoint(mu=float(m), mu_s=float(s), mu_c=float(mc), mu_sc=float(msc), depth=float(dp))
        for m, s, mc, msc, dp in zip(
            mu_g.ravel(), mu_s_g.ravel(), mu_c.ravel(), mu_sc.ravel(), depth.ravel(), strict=True
        )
    ]


def triangoloid_sample(
    spec: TmstSpec,
    grid_n: int,
    *,
    mu_min: float | None = None,
    mu_s_min: float | None = None,
) -> list[TriangoloidPoint]:
    """Sample the triangoloid of a TMST.

    Rows come in a fixed order: the grid_n × grid_n logarithmic grid (row-major
    in mu), then the red side (mu = 1), the green side (mu_s = 1), the lower
    side (mu_s = mu_s_min) and finally the exact homodyne vertex.
    """
    if isinstance(grid_n, bool) or not isinstance(grid_n, int) or not 2 <= grid_n <= MAX_GRID:
        raise InvalidInputError(f"grid_n must be an integer in [2, {MAX_GRID}], got {grid_n!r}")
    mu_min = cfg.MU_MIN if mu_min is None else mu_min
    mu_s_min = cfg.MU_S_MIN if mu_s_min is None else mu_s_min
    for name, value in (("mu_min", mu_min), ("mu_s_min", mu_s_min)):
        if not 0.0 < value < 1.0:
            raise InvalidInputError(f"{name} must lie in (0, 1), got {value}")
    mus = np.geomspace(mu_min, 1.0, grid_n)
    mu_ss = np.geomspace(mu_s_min, 1.0, grid_n)
    one = np.array([1.0])
    return [
        *_sample_grid(spec, mus, mu_ss),
        *_sample_grid(spec, one, mu_ss),
        *_sample_grid(spec, mus, one),
        *_sample_grid(spec, mus, np.array([mu_s_min])),
        triangoloid_vertex(spec),
    ]


def nonclassical_boundary(mu_c: float) -> float:
    """Squeezing parameter below which a conditional state of purity mu_c is nonclassical."""
    if not math.isfinite(mu_c) or not 0.0 < mu_c <= 1.0:
        raise InvalidInputError(f"mu_c must lie in (0, 1], got {mu_c}")
    return 2.0 * mu_c / (1.0 + mu_c * mu_c)
