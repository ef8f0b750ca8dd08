import click
from pydantic import ValidationError

from infra.cli.audit import AuditCommands
from infra.cli.state import StateCommands
from infra.cli.tmst import TmstCommands
from infra.enumerators.exit_code import ExitCode
from settings import VERSION, Config


class CLIBuilder:
    """Builder for the steerlab command-line application.

    Creates the click group and registers the command classes on it.
    """

    def __init__(self, config_factory: type[Config] = Config) -> None:
        """Initialize CLI builder.

        Args:
            config_factory: Builds a fresh configuration for every invocation
        """
        self._config_factory = config_factory
        self.app = click.Group(
            "steerlab",
            callback=self._load_config,
            help="Weak and strong nonclassical steering of two-mode Gaussian states.",
        )
        self.app.params.append(
            click.Option(
                ["--version"],
                is_flag=True,
                expose_value=False,
                is_eager=True,
                callback=self._print_version,
                help="Show the version and exit.",
            )
        )

    def __call__(self) -> click.Group:
        """Return the click group.

        Returns:
            Configured command group
        """
        return self.app

    def build_stack(self) -> None:
        """Register all commands."""
        StateCommands(self.app)  # analyze, scan, condition
        TmstCommands(self.app)
        AuditCommands(self.app)

    def _load_config(self) -> None:
        ctx = click.get_current_context()
        try:
            ctx.obj = self._config_factory()
        except ValidationError as exc:
            click.echo(f"error: invalid configuration: {exc}", err=True)
            ctx.exit(ExitCode.MALFORMED_INPUT)

    @staticmethod
    def _print_version(ctx: click.Context, _param: click.Parameter, value: bool) -> None:
        if not value or ctx.resilient_parsing:
            return
        click.echo(VERSION)
        ctx.exit()
