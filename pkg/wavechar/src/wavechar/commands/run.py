# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import pathlib

import typer

from wavechar.dataset import load_dataset
from wavechar.evaluation import evaluate_collection, write_per_seed
from wavechar.utils import console

from .options import embedding_params, eval_config, load_run_configuration, reported_errors, thread_count

run: typer.Typer = typer.Typer()


def execute(
    input_dir: pathlib.Path,
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
    per_seed: pathlib.Path | None = None,
) -> None:
    with reported_errors():
        configuration = load_run_configuration(config_file)
        params = embedding_params(configuration, kmax, d, tau, tmax, variants)
        config = eval_config(configuration, seeds, test_ratio, l2_strength)
        workers = thread_count(threads)

        collection = load_dataset(input_dir)
        console.info(f"Loaded {len(collection)} graphs from {input_dir}")
        report = evaluate_collection(collection, params, config, workers, skip_bad_graphs, progress=True)
        if per_seed is not None:
            write_per_seed(per_seed, report)

    typer.echo(report.summary())


@run.callback(invoke_without_command=True)  # type: ignore[misc]
def main(
    input_dir: pathlib.Path = typer.Option(..., "--input", help="Dataset directory holding graphs.json and target.csv"),
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
    per_seed: pathlib.Path | None = typer.Option(None, "--per-seed", help="Write seed,auc rows to this CSV"),
) -> None:
    execute(
        input_dir,
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
        per_seed,
    )
