from __future__ import annotations

from pathlib import Path

import click

from domain.tmst import MAX_GRID, TmstSpec
from infra.cli.base import CommandGroup
from infra.schemas.report import TmstReport

DEFAULT_GRID = 200
_UNIT_OPEN = click.FloatRange(0.0, 1.0, min_open=True, max_open=True)


class TmstCommands(CommandGroup):
    """Two-mode squeezed thermal states: verdict, vertex and triangoloid CSV."""

    def _register_commands(self) -> None:
        self.group.add_command(
            click.Command(
                "tmst",
                callback=self.tmst,
                params=[
                    click.Argument(["na"], type=click.FloatRange(min=0.0)),
                    click.Argument(["nb"], type=click.FloatRange(min=0.0)),
                    click.Argument(["r"], type=click.FloatRange(min=0.0)),
                    click.Option(
                        ["--triangoloid"],
                        type=click.Path(dir_okay=False, path_type=Path),
                        default=None,
                        help="Write the sampled triangoloid to this CSV file",
                    ),
                    click.Option(
                        ["--grid"], type=click.IntRange(2, MAX_GRID), default=DEFAULT_GRID, show_default=True
                    ),
                    click.Option(["--mu-min"], type=_UNIT_OPEN, default=None),
                    click.Option(["--mu-s-min"], type=_UNIT_OPEN, default=None),
                ],
                help="Steerability verdict of a TMST(NA, NB, R) and its homodyne vertex.",
            )
        )

    def tmst(
        self,
        na: float,
        nb: float,
        r: float,
        triangoloid: Path | None,
        grid: int,
        mu_min: float | None,
        mu_s_min: float | None,
    ) -> None:
        self.run(
            "tmst",
            self._tmst,
            na=na,
            nb=nb,
            r=r,
            triangoloid=triangoloid,
            grid=grid,
            mu_min=mu_min,
            mu_s_min=mu_s_min,
        )

    def _tmst(
        self,
        na: float,
        nb: float,
        r: float,
        triangoloid: Path | None,
        grid: int,
        mu_min: float | None,
        mu_s_min: float | None,
    ) -> None:
        analysis, rows = self.use_case().tmst(
            TmstSpec(n_a=na, n_b=nb, r=r), out=triangoloid, grid_n=grid, mu_min=mu_min, mu_s_min=mu_s_min
        )
        self.emit(
            TmstReport(
                na=na,
                nb=nb,
                r=r,
                verdict="steerable" if analysis.steerable else "not steerable",
                steerable=analysis.steerable,
                vertex_lambda=analysis.vertex_lambda,
                squeezing_threshold=analysis.squeezing_threshold,
                triangoloid=str(triangoloid) if triangoloid is not None else None,
                rows=rows,
            )
        )
