from __future__ import annotations

from pathlib import Path
from typing import Protocol

from app.services.analysis import AnalysisService, AuditOutcome, StateAnalysis, TmstAnalysis
from app.services.oracle import ScanResult
from domain.conditioning import ConditionalState, MeasurementSpec
from domain.symplectic import GaussianState
from domain.tmst import TmstSpec, TriangoloidPoint
from infra.enumerators.steering import QuadratureBranch


class TriangoloidWriter(Protocol):
    def write(self, path: Path, points: list[TriangoloidPoint]) -> int: ...


class AnalysisUseCase:
    """Use case layer for the command-line operations."""

    def __init__(self, service: AnalysisService, writer: TriangoloidWriter) -> None:
        """Initialize use case with service and writer dependencies.

        Args:
            service: Service running the classifiers and scans
            writer: Writer for triangoloid point clouds
        """
        self._svc = service
        self._writer = writer

    def analyze(self, state: GaussianState) -> StateAnalysis:
        return self._svc.analyze(state)

    def tmst(
        self,
        spec: TmstSpec,
        *,
        out: Path | None = None,
        grid_n: int | None = None,
        mu_min: float | None = None,
        mu_s_min: float | None = None,
    ) -> tuple[TmstAnalysis, int | None]:
        """Classify a TMST and write its triangoloid when ``out`` is given.

        Args:
            spec: Thermal photons and squeezing of the TMST
            out: CSV destination, None to skip the triangoloid
            grid_n: Triangoloid grid size
            mu_min: Smallest measurement purity of the grid
            mu_s_min: Smallest squeezing parameter of the grid

        Returns:
            The TMST analysis and the number of rows written, None without ``out``
        """
        analysis = self._svc.tmst(
            spec, grid_n=grid_n if out is not None else None, mu_min=mu_min, mu_s_min=mu_s_min
        )
        if out is None or analysis.points is None:
            return analysis, None
        return analysis, self._writer.write(out, analysis.points)

    def scan(
        self,
        state: GaussianState,
        grid: tuple[int, int, int] | None = None,
        mus_min: float | None = None,
    ) -> tuple[ScanResult, float]:
        return self._svc.scan(state, grid, mus_min)

    def audit(self, seed: int, count: int) -> AuditOutcome:
        return self._svc.audit(seed, count)

    def condition(self, state: GaussianState, measurement: MeasurementSpec | QuadratureBranch) -> ConditionalState:
        return self._svc.condition(state, measurement)
