# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import pathlib

import typer

from wavechar.dataset import load_dataset
from wavechar.evaluation import sensitivity_sweep, sensitivity_table_csv, write_sensitivity_table
from wavechar.utils import console

from .options import (
    embedding_params,
    eval_config,
    load_run_configuration,
    reported_errors,
    sensitivity_grid,
    thread_count,
)

sensitivity: typer.Typer = typer.Typer()


def run(
    input_dir: pathlib.Path,
    grid: list[str] | None = None,
    output: pathlib.Path | None = None,
    kmax: int | None = None,
    d: int | None = None,
    tau: float | None = None,
    tmax: float | None = None,
    variants: str | None = None,
    seeds: str | None = None,
    test_ratio: float | None = None,
    l2_strength: float | None = None,
    threads: int | None = None,
    skip_bad_graphs: bool = False,
    config_file: pathlib.Path | None = None,
) -> None:
    with reported_errors():
        configuration = load_run_configuration(config_file)
        sweep = sensitivity_grid(configuration, grid)
        base = embedding_params(configuration, kmax, d, tau, tmax, variants)
        config = eval_config(configuration, seeds, test_ratio, l2_strength)
        workers = thread_count(threads)

        collection = load_dataset(input_dir)
        console.info(f"Loaded {len(collection)} graphs from {input_dir}")
        rows = sensitivity_sweep(collection, base, sweep, config, workers, skip_bad_graphs)
        if output is not None:
            write_sensitivity_table(output, rows)

    if output is None:
        typer.echo(sensitivity_table_csv(rows), nl=False)
    else:
        console.success(f"Wrote {len(rows)} sensitivity rows to {output}")


@sensitivity.callback(invoke_without_command=True)  # type: ignore[misc]
def main(
    input_dir: pathlib.Path = typer.Option(..., "--input", help="Dataset directory holding graphs.json and target.csv"),
    grid: list[str] | None = typer.Option(None, "--grid", help="PARAM=V1,V2,... with PARAM in kmax, d, tau, tmax"),
    output: pathlib.Path | None = typer.Option(None, "--output", help="Sensitivity CSV to write [default: stdout]"),
    kmax: int | None = typer.Option(None, "--kmax", help="Largest hop scale [default: 5]"),
    d: int | None = typer.Option(None, "--d", help="Sampling points per feature [default: 25]"),
    tau: float | None = typer.Option(None, "--tau", help="Heat kernel scale [default: 0.5]"),
    tmax: float | None = typer.Option(None, "--tmax", help="Largest sampling point [default: 2.5]"),
    variants: str | None = typer.Option(None, "--variants", help="Transition variants [default: similarity,influence]"),
    seeds: str | None = typer.Option(None, "--seeds", help="Comma-separated split seeds [default: 0..9]"),
    test_ratio: float | None = typer.Option(None, "--test-ratio", help="Test share of each split [default: 0.2]"),
    l2_strength: float | None = typer.Option(None, "--l2-strength", help="Inverse L2 penalty [default: 1.0]"),
    threads: int | None = typer.Option(None, "--threads", help="Worker processes, 0 for all CPUs [default: 1]"),
    skip_bad_graphs: bool = typer.Option(False, "--skip-bad-graphs", help="Log and skip graphs that fail"),
    config_file: pathlib.Path | None = typer.Option(None, "--config", help="YAML run configuration"),
) -> None:
    run(
        input_dir,
        grid,
        output,
        kmax,
        d,
        tau,
        tmax,
        variants,
        seeds,
        test_ratio,
        l2_strength,
        threads,
        skip_bad_graphs,
        config_file,
    )
