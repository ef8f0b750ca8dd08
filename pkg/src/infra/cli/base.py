from __future__ import annotations

import json
from collections.abc import Callable
from typing import Any

import click
from pydantic import ValidationError

from app.usecases.analysis import AnalysisUseCase
from domain.errors import SteerlabError, UnphysicalStateError
from infra.common.logging import log_command
from infra.dependencies.analysis import provide_use_case
from infra.enumerators.exit_code import ExitCode, exit_code_for
from infra.schemas.report import ReportModel, round_significant
from settings import Config


class CommandGroup:
    """Base for command registrations: shared config, use case and error-to-exit-code handling."""

    def __init__(self, group: click.Group) -> None:
        """Register the commands of this group.

        Args:
            group: Click group the commands are attached to
        """
        self.group = group
        self._register_commands()

    def _register_commands(self) -> None:
        raise NotImplementedError

    @staticmethod
    def config() -> Config:
        """Configuration of the current invocation."""
        return click.get_current_context().ensure_object(Config)

    def use_case(self) -> AnalysisUseCase:
        return provide_use_case(self.config())

    def emit(self, report: ReportModel) -> None:
        click.echo(report.to_json(self.config().OUTPUT_DIGITS))

    def emit_error(self, payload: Any) -> None:
        click.echo(json.dumps(round_significant(payload, self.config().OUTPUT_DIGITS), indent=2), err=True)

    def run(self, name: str, func: Callable[..., int | None], **params: Any) -> None:
        """Run a command body, log it and exit with the mapped code.

        Args:
            name: Command name used in the logs
            func: Command body returning an exit code, None meaning success
            params: Parameters forwarded to ``func``
        """
        ctx = click.get_current_context()
        try:
            code = log_command(name)(func)(**params)
        except (SteerlabError, ValidationError) as exc:
            code = exit_code_for(exc)
            click.echo(f"error: {exc}", err=True)
            if isinstance(exc, UnphysicalStateError):
                report = exc.report
                self.emit_error(
                    {
                        "physical": report.physical,
                        "symmetric": report.symmetric,
                        "ur_satisfied": report.ur_satisfied,
                        "min_ur_eigenvalue": report.min_ur_eigenvalue,
                        "tol": report.tol,
                    }
                )
        ctx.exit(int(code or ExitCode.OK))
