import os
from pathlib import Path
from sys import stderr

from dotenv import load_dotenv
from loguru import logger
from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings

load_dotenv()

PROJECT_ROOT = Path(__file__).parent.parent
VERSION = "0.1.0"


class Config(BaseSettings):
    """Runtime configuration with environment variable support.

    Uses Pydantic BaseSettings to load tolerances, grid defaults and logging
    options from the environment with fallback defaults.
    """

    ENVIRONMENT: str = Field(
        default=os.getenv("ENVIRONMENT", "dev"),
        description="Project execution environment",
    )
    LOG_LEVEL: str | None = Field(default=None, description="Explicit log level, overrides the environment default")
    PSD_TOL: float = Field(
        default=1e-9,
        gt=0,
        validation_alias=AliasChoices("STEERLAB_TOL", "PSD_TOL"),
        description="Absolute tolerance of positive-semidefiniteness checks",
    )
    CROSS_CHECK: bool = Field(
        default=True,
        validation_alias=AliasChoices("STEERLAB_CROSS_CHECK", "CROSS_CHECK"),
        description="Cross-check EPR steerability against the eigenvalue criterion",
    )
    MU_MIN: float = Field(default=1e-3, gt=0, lt=1, description="Smallest measurement purity on triangoloid grids")
    MU_S_MIN: float = Field(default=1e-3, gt=0, lt=1, description="Smallest squeezing parameter on triangoloid grids")
    SCAN_GRID: tuple[int, int, int] = Field(default=(5, 40, 8), description="Oracle grid (n_mu, n_mus, n_phi)")
    SCAN_MU_S_MIN: float = Field(default=1e-4, gt=0, lt=1, description="Smallest squeezing parameter of oracle scans")
    OUTPUT_DIGITS: int = Field(default=9, ge=1, le=17, description="Significant digits of emitted floats")

    def configure_logging(self):
        """Configure application logging with environment-specific levels.

        Sets up Loguru logger on stderr with colored formatting. Standard output
        is reserved for reports, so nothing is ever logged there.
        """
        logger.remove()
        logger.add(
            stderr,
            format="<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
            level=self.LOG_LEVEL or ("INFO" if self.ENVIRONMENT == "prod" else "DEBUG"),
        )


cfg = Config()
cfg.configure_logging()


def resolve_tol(tol: float | None) -> float:
    """Return ``tol`` or the configured PSD tolerance when it is None."""
    return cfg.PSD_TOL if tol is None else tol
