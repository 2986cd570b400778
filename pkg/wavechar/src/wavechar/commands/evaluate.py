# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import pathlib

import numpy as np
import typer

from wavechar.dataset import read_embeddings, read_targets
from wavechar.errors import InputError
from wavechar.evaluation import evaluate as evaluate_embeddings
from wavechar.evaluation import write_per_seed
from wavechar.utils import console

from .options import eval_config, load_run_configuration, reported_errors, thread_count

evaluate: typer.Typer = typer.Typer()


def run(
    embeddings: pathlib.Path,
    target: pathlib.Path,
    seeds: str | None = None,
    test_ratio: float | None = None,
    l2_strength: float | None = None,
    threads: int | None = None,
    config_file: pathlib.Path | None = None,
    per_seed: pathlib.Path | None = None,
) -> None:
    with reported_errors():
        configuration = load_run_configuration(config_file)
        config = eval_config(configuration, seeds, test_ratio, l2_strength)
        workers = thread_count(threads)

        ids, matrix = read_embeddings(embeddings)
        labels = read_targets(target)
        missing = [graph_id for graph_id in ids if graph_id not in labels]
        if missing:
            raise InputError(f"{target}: no label for graph {missing[0]!r} of {embeddings} ({len(missing)} missing)")
        extra = len(labels) - len(ids)
        if extra:
            console.warning(f"{target}: ignoring {extra} labels without an embedding")

        y = np.array([labels[graph_id] for graph_id in ids], dtype=np.int64)
        report = evaluate_embeddings(matrix, y, config, workers=workers)
        if per_seed is not None:
            write_per_seed(per_seed, report)

    typer.echo(report.summary())


@evaluate.callback(invoke_without_command=True)  # type: ignore[misc]
def main(
    embeddings: pathlib.Path = typer.Option(..., "--embeddings", help="Embedding CSV written by 'wavechar embed'"),
    target: pathlib.Path = typer.Option(..., "--target", help="Label CSV with header id,target"),
    seeds: str | None = typer.Option(None, "--seeds", help="Comma-separated split seeds [default: 0..9]"),
    test_ratio: float | None = typer.Option(None, "--test-ratio", help="Test share of each split [default: 0.2]"),
    l2_strength: float | None = typer.Option(None, "--l2-strength", help="Inverse L2 penalty [default: 1.0]"),
    threads: int | None = typer.Option(None, "--threads", help="Seeds evaluated at once, 0 for all CPUs"),
    config_file: pathlib.Path | None = typer.Option(None, "--config", help="YAML run configuration"),
    per_seed: pathlib.Path | None = typer.Option(None, "--per-seed", help="Write seed,auc rows to this CSV"),
) -> None:
    run(embeddings, target, seeds, test_ratio, l2_strength, threads, config_file, per_seed)
