from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from app.services.oracle import (
    HierarchyViolation,
    ScanResult,
    brute_force_min_lambda,
    find_hierarchy_violations,
    invariant_mismatches,
    sample_physical_states,
)
from domain.conditioning import (
    ConditionalState,
    MeasurementSpec,
    condition_quadrature,
    condition_state,
    conditional_params,
)
from domain.errors import UnphysicalStateError
from domain.steering import SteeringReport, classify_wns, hierarchy_report
from domain.symplectic import (
    VACUUM_VARIANCE,
    CanonicalParams,
    GaussianState,
    PhysicalityReport,
    SymplecticInvariants,
    canonical_params,
    check_physical,
    min_cm_eigenvalue,
    ppt_symplectic_min,
    symplectic_invariants,
    symplectic_spectrum,
)
from domain.tmst import (
    TmstSpec,
    TriangoloidPoint,
    tmst_params,
    tmst_squeezing_threshold,
    tmst_steerable,
    triangoloid_sample,
    vertex_lambda,
)
from infra.enumerators.steering import QuadratureBranch
from settings import Config


@dataclass(frozen=True, slots=True)
class StateAnalysis:
    physicality: PhysicalityReport
    canonical: CanonicalParams
    invariants: SymplecticInvariants
    steering: SteeringReport
    spectrum: tuple[float, float]
    ppt_nu_minus: float


@dataclass(frozen=True, slots=True)
class TmstAnalysis:
    spec: TmstSpec
    canonical: CanonicalParams
    steerable: bool
    vertex_lambda: float
    squeezing_threshold: float
    points: list[TriangoloidPoint] | None = None


@dataclass(frozen=True, slots=True)
class AuditOutcome:
    seed: int
    count: int
    hierarchy: list[HierarchyViolation]
    invariant: list[int]
    states: list[GaussianState]

    @property
    def violations(self) -> int:
        return len(self.hierarchy) + len(self.invariant)


class AnalysisService:
    """Service layer running the steering classifiers, scans and audits.

    Tolerance and cross-check settings come from the injected configuration, so
    each CLI invocation sees its own environment.
    """

    def __init__(self, config: Config) -> None:
        """Initialize service with configuration.

        Args:
            config: Runtime configuration with tolerances and grid defaults
        """
        self._cfg = config

    @property
    def tol(self) -> float:
        return self._cfg.PSD_TOL

    def _require_physical(self, state: GaussianState) -> PhysicalityReport:
        report = check_physical(state, self.tol)
        if not report.physical:
            raise UnphysicalStateError(report)
        return report

    def analyze(self, state: GaussianState) -> StateAnalysis:
        """Classify a two-mode state and enforce the steering hierarchy.

        Args:
            state: Two-mode Gaussian state

        Returns:
            Physicality, canonical form, invariants, steering report and symplectic spectrum
        """
        physicality = self._require_physical(state)
        invariants = symplectic_invariants(state)
        report = hierarchy_report(state, self.tol, cross_check=self._cfg.CROSS_CHECK)
        return StateAnalysis(
            physicality=physicality,
            canonical=canonical_params(invariants, self.tol),
            invariants=invariants,
            steering=report,
            spectrum=symplectic_spectrum(state),
            ppt_nu_minus=ppt_symplectic_min(state),
        )

    def tmst(
        self,
        spec: TmstSpec,
        *,
        grid_n: int | None = None,
        mu_min: float | None = None,
        mu_s_min: float | None = None,
    ) -> TmstAnalysis:
        """Universal steerability verdict of a TMST, optionally with its sampled triangoloid.

        Args:
            spec: Thermal photons and squeezing of the TMST
            grid_n: Triangoloid grid size, None to skip sampling
            mu_min: Smallest measurement purity of the grid
            mu_s_min: Smallest squeezing parameter of the grid

        Returns:
            Verdict, vertex λ, squeezing threshold and the sampled points
        """
        canon = tmst_params(spec)
        points = None
        if grid_n is not None:
            points = triangoloid_sample(
                spec,
                grid_n,
                mu_min=self._cfg.MU_MIN if mu_min is None else mu_min,
                mu_s_min=self._cfg.MU_S_MIN if mu_s_min is None else mu_s_min,
            )
        return TmstAnalysis(
            spec=spec,
            canonical=canon,
            steerable=tmst_steerable(spec),
            vertex_lambda=vertex_lambda(spec),
            squeezing_threshold=tmst_squeezing_threshold(spec.n_a, spec.n_b),
            points=points,
        )

    def scan(
        self,
        state: GaussianState,
        grid: tuple[int, int, int] | None = None,
        mus_min: float | None = None,
    ) -> tuple[ScanResult, float]:
        """Brute-force scan of a state together with its analytic quadrature limit.

        Args:
            state: Two-mode Gaussian state
            grid: (n_mu, n_mus, n_phi), configured default when None
            mus_min: Smallest squeezing parameter, configured default when None

        Returns:
            Scan result and the analytic λ_wns
        """
        n_mu, n_mus, n_phi = grid or self._cfg.SCAN_GRID
        result = brute_force_min_lambda(
            state,
            n_mu,
            n_mus,
            n_phi,
            mus_min=self._cfg.SCAN_MU_S_MIN if mus_min is None else mus_min,
            tol=self.tol,
        )
        lam, _ = classify_wns(canonical_params(symplectic_invariants(state), self.tol))
        logger.info(f"Scan best λ₋ {result.best_lambda:.9g}, analytic {lam:.9g}")
        return result, lam

    def audit(self, seed: int, count: int) -> AuditOutcome:
        """Sample random physical states and check the hierarchy and the invariant-form formulas.

        Args:
            seed: Sampler seed
            count: Number of states

        Returns:
            Offending states for both checks
        """
        states = sample_physical_states(seed, count)
        return AuditOutcome(
            seed=seed,
            count=count,
            hierarchy=find_hierarchy_violations(states, self.tol, cross_check=self._cfg.CROSS_CHECK),
            invariant=invariant_mismatches(states, self.tol, seed=seed),
            states=states,
        )

    def condition(self, state: GaussianState, measurement: MeasurementSpec | QuadratureBranch) -> ConditionalState:
        """Conditional state of mode A after measuring mode B.

        Args:
            state: Two-mode Gaussian state
            measurement: POVM specification, or a quadrature branch of the canonical form

        Returns:
            Conditional CM with its parameters, least eigenvalue and depth
        """
        self._require_physical(state)
        if isinstance(measurement, QuadratureBranch):
            canon = canonical_params(symplectic_invariants(state), self.tol)
            sigma_c = condition_quadrature(canon, measurement)
            lam = min_cm_eigenvalue(sigma_c)
            return ConditionalState(
                cm=sigma_c,
                params=conditional_params(sigma_c, self.tol),
                lambda_minus=lam,
                depth=max(0.0, VACUUM_VARIANCE - lam),
            )
        return condition_state(state, measurement, self.tol)
