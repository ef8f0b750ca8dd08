from __future__ import annotations

import csv
from pathlib import Path

from loguru import logger

from domain.errors import OutputError
from domain.tmst import TriangoloidPoint

HEADER = ("mu", "mu_s", "mu_c", "mu_sc", "depth")


class CsvTriangoloidWriter:
    """Writes triangoloid samples as CSV with a fixed header and column order."""

    def __init__(self, digits: int = 9) -> None:
        self._digits = digits

    def _fmt(self, value: float) -> str:
        return f"{value:.{self._digits}g}"

    def write(self, path: Path, points: list[TriangoloidPoint]) -> int:
        """Write ``points`` to ``path`` and return the number of data rows."""
        try:
            with Path(path).open("w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh)
                writer.writerow(HEADER)
                writer.writerows(
                    [self._fmt(p.mu), self._fmt(p.mu_s), self._fmt(p.mu_c), self._fmt(p.mu_sc), self._fmt(p.depth)]
                    for p in points
                )
        except OSError as exc:
            raise OutputError(f"cannot write {path}: {exc.strerror or exc}") from exc
        logger.info(f"Wrote {len(points)} triangoloid rows to {path}")
        return len(points)
