# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import pathlib

import typer

from wavechar.constants import ExitCodes
from wavechar.utils import console
from wavechar.utils.config import default_configuration, load_configuration, save_configuration

from .options import reported_errors

config: typer.Typer = typer.Typer()


@config.command("init")  # type: ignore[misc]
def init_command(
    output: pathlib.Path = typer.Option(pathlib.Path("wavechar.yaml"), "--output", help="Configuration file to write"),
    force: bool = typer.Option(False, "--force", help="Overwrite an existing file"),
) -> None:
    if output.exists() and not force:
        console.error(f"{output} already exists; pass --force to overwrite it")
        raise typer.Exit(ExitCodes.input_error)

    with reported_errors():
        save_configuration(default_configuration(), output)
    console.success(f"Default configuration saved to {output}")


@config.command("validate")  # type: ignore[misc]
def validate_command(
    path: pathlib.Path = typer.Argument(..., help="Configuration file to check"),
) -> None:
    with reported_errors():
        configuration = load_configuration(path)

    sections = [name for name in ("embedding", "evaluation", "sensitivity") if name in configuration]
    console.success(f"{path} is a valid revision {configuration['revision']} configuration")
    typer.echo(f"  Sections: {', '.join(sections) if sections else 'none (defaults apply)'}", err=True)


@config.callback(invoke_without_command=True)  # type: ignore[misc]
def main(ctx: typer.Context) -> None:
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit(0)
