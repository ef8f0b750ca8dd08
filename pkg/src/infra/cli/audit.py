from __future__ import annotations

import click

from infra.cli.base import CommandGroup
from infra.enumerators.exit_code import ExitCode
from infra.schemas.report import AuditReport, OffendingState

DEFAULT_SEED = 7
DEFAULT_COUNT = 1000


class AuditCommands(CommandGroup):
    """Property audit over random physical states."""

    def _register_commands(self) -> None:
        self.group.add_command(
            click.Command(
                "audit",
                callback=self.audit,
                params=[
                    click.Option(["--seed"], type=click.IntRange(min=0), default=DEFAULT_SEED, show_default=True),
                    click.Option(["--count"], type=click.IntRange(min=1), default=DEFAULT_COUNT, show_default=True),
                ],
                help="Check the steering hierarchy and the invariant-form formulas on random states.",
            )
        )

    def audit(self, seed: int, count: int) -> None:
        self.run("audit", self._audit, seed=seed, count=count)

    def _audit(self, seed: int, count: int) -> int:
        outcome = self.use_case().audit(seed, count)
        self.emit(
            AuditReport(
                seed=seed,
                count=count,
                hierarchy_violations=len(outcome.hierarchy),
                invariant_mismatches=len(outcome.invariant),
                violations=outcome.violations,
            )
        )
        click.echo(f"{outcome.violations} violations", err=True)
        if not outcome.violations:
            return ExitCode.OK
        offending = [
            OffendingState(index=v.index, cm=v.state.cm.tolist(), violations=list(v.violations))
            for v in outcome.hierarchy
        ] + [
            OffendingState(index=i, cm=outcome.states[i].cm.tolist(), violations=["invariant-form mismatch"])
            for i in outcome.invariant
        ]
        self.emit_error([state.model_dump() for state in offending])
        return ExitCode.HIERARCHY_VIOLATION
