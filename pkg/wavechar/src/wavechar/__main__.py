# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import sys
from collections.abc import Sequence

import typer

from .commands import config, embed, evaluate, sensitivity, stats
from .commands import run as run_command
from .constants import ExitCodes

# typer may dispatch through its own bundled click, so take the error types from it
_click_errors = sys.modules[typer.BadParameter.__module__]

app = typer.Typer()

app.add_typer(embed, name="embed", help="Embed every graph of a dataset into a CSV")
app.add_typer(evaluate, name="evaluate", help="Score embeddings with repeated logistic regression holdouts")
app.add_typer(run_command, name="run", help="Embed and evaluate a dataset without an intermediate file")
app.add_typer(sensitivity, name="sensitivity", help="Sweep one embedding parameter at a time")
app.add_typer(stats, name="stats", help="Describe the graphs of a dataset")
app.add_typer(config, name="config", help="Run configuration files")


def version_callback(value: bool) -> None:
    if value:
        from . import __version__

        typer.echo(f"Wavechar version: {__version__}")
        raise typer.Exit(0)


@app.callback(invoke_without_command=True)  # type: ignore[misc]
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="Show the version and exit",
        callback=version_callback,
        is_eager=True,
    ),
) -> None:
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit(0)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit status; usage errors count as input errors."""
    try:
        result = app(args=list(argv) if argv is not None else None, prog_name="wavechar", standalone_mode=False)
    except _click_errors.ClickException as e:
        e.show()
        return ExitCodes.input_error
    except _click_errors.Abort:
        typer.echo("Aborted!", err=True)
        return ExitCodes.input_error
    return result if isinstance(result, int) else ExitCodes.ok


def cli() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    cli()
