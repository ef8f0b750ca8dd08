import sys
from pathlib import Path

from loguru import logger

from domain.errors import SteerlabError
from domain.tmst import TmstSpec
from infra.dependencies.analysis import provide_use_case
from settings import PROJECT_ROOT, cfg

GRID = 200
OUTPUT_DIR = PROJECT_ROOT / "output"

REFERENCE_STATES = {
    "triangoloid_not_steerable.csv": TmstSpec(n_a=4.5, n_b=4.5, r=1.2),
    "triangoloid_steerable.csv": TmstSpec(n_a=0.75, n_b=0.75, r=1.2),
}


def run_triangoloids(output_dir: Path = OUTPUT_DIR) -> None:
    logger.info("Starting triangoloid export")

    try:
        output_dir.mkdir(parents=True, exist_ok=True)
        uc = provide_use_case(cfg)

        for filename, spec in REFERENCE_STATES.items():
            analysis, rows = uc.tmst(spec, out=output_dir / filename, grid_n=GRID)
            verdict = "steerable" if analysis.steerable else "not steerable"
            logger.success(f"{filename}: {rows} rows, {verdict}, vertex λ {analysis.vertex_lambda:.6f}")

    except (OSError, SteerlabError) as e:
        logger.error(f"An error occurred during triangoloid export: {e}")
        sys.exit(1)

    finally:
        logger.info("Triangoloid export finished")


if __name__ == "__main__":
    run_triangoloids()
