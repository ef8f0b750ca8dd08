from __future__ import annotations

from app.services.analysis import AnalysisService
from app.usecases.analysis import AnalysisUseCase
from infra.io.triangoloid_csv import CsvTriangoloidWriter
from settings import Config


def provide_use_case(config: Config) -> AnalysisUseCase:
    """Provide analysis use case with all dependencies.

    Creates and configures an AnalysisUseCase with the analysis service and a
    CSV writer honouring the configured output precision.

    Args:
        config: Configuration of the current invocation

    Returns:
        Configured analysis use case
    """
    svc = AnalysisService(config)
    return AnalysisUseCase(service=svc, writer=CsvTriangoloidWriter(digits=config.OUTPUT_DIGITS))
