# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import pathlib

import typer

from wavechar.dataset import dataset_statistics, load_dataset, print_summary

from .options import reported_errors

stats: typer.Typer = typer.Typer()


def run(input_dir: pathlib.Path) -> None:
    with reported_errors():
        collection = load_dataset(input_dir)
        summary = dataset_statistics(collection)

    print_summary(f"Dataset: {input_dir}", summary)
    typer.echo("statistic,value")
    for name, value in dataclasses.asdict(summary).items():
        typer.echo(f"{name},{value}")


@stats.callback(invoke_without_command=True)  # type: ignore[misc]
def main(
    input_dir: pathlib.Path = typer.Option(..., "--input", help="Dataset directory holding graphs.json"),
) -> None:
    run(input_dir)
