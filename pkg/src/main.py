"""Command-line entry point of steerlab.

Builds the click application with all commands through the CLIBuilder.
"""

from infra.cli import CLIBuilder

builder = CLIBuilder()
builder.build_stack()
cli = builder()


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
