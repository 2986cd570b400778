# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import pathlib

import typer

from wavechar.dataset import load_dataset, write_embeddings
from wavechar.embedding import embed_collection
from wavechar.utils import console

from .options import embedding_params, load_run_configuration, reported_errors, thread_count

embed: typer.Typer = typer.Typer()


def run(
    input_dir: pathlib.Path,
    output: pathlib.Path,
    kmax: int | None = None,
    d: int | None = None,
    tau: float | None = None,
    tmax: float | None = None,
    variants: str | None = None,
    threads: int | None = None,
    skip_bad_graphs: bool = False,
    config_file: pathlib.Path | None = None,
) -> None:
    with reported_errors():
        configuration = load_run_configuration(config_file)
        params = embedding_params(configuration, kmax, d, tau, tmax, variants)
        workers = thread_count(threads)

        collection = load_dataset(input_dir)
        console.info(f"Loaded {len(collection)} graphs from {input_dir}")
        batch = embed_collection(
            collection.items(),
            params,
            workers=workers,
            skip_bad_graphs=skip_bad_graphs,
            ids=collection.ids,
            progress=True,
        )
        ids = [collection.ids[i] for i in batch.indices]
        write_embeddings(output, ids, batch.matrix)

    console.success(f"Wrote {len(ids)} embeddings of dimension {batch.matrix.shape[1]} to {output}")
    if batch.failures:
        console.warning(f"Skipped {len(batch.failures)} graphs")


@embed.callback(invoke_without_command=True)  # type: ignore[misc]
def main(
    input_dir: pathlib.Path = typer.Option(..., "--input", help="Dataset directory holding graphs.json"),
    output: pathlib.Path = typer.Option(..., "--output", help="Embedding CSV to write"),
    kmax: int | None = typer.Option(None, "--kmax", help="Largest hop scale [default: 5]"),
    d: int | None = typer.Option(None, "--d", help="Sampling points per feature [default: 25]"),
    tau: float | None = typer.Option(None, "--tau", help="Heat kernel scale [default: 0.5]"),
    tmax: float | None = typer.Option(None, "--tmax", help="Largest sampling point [default: 2.5]"),
    variants: str | None = typer.Option(None, "--variants", help="Transition variants [default: similarity,influence]"),
    threads: int | None = typer.Option(None, "--threads", help="Worker processes, 0 for all CPUs [default: 1]"),
    skip_bad_graphs: bool = typer.Option(False, "--skip-bad-graphs", help="Log and skip graphs that fail"),
    config_file: pathlib.Path | None = typer.Option(None, "--config", help="YAML run configuration"),
) -> None:
    run(input_dir, output, kmax, d, tau, tmax, variants, threads, skip_bad_graphs, config_file)
