# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import pathlib
from collections.abc import Iterator, Sequence
from contextlib import contextmanager

import typer

from wavechar.constants import Defaults, ExitCodes
from wavechar.embedding import EmbeddingParams, Variant
from wavechar.errors import InputError, NumericError
from wavechar.evaluation import EvalConfig
from wavechar.utils import console
from wavechar.utils.config import ConfigurationR1, load_configuration

# flag spellings accepted by --grid, mapped to parameter names
GRID_PARAMETERS = {
    "kmax": "k_max",
    "k_max": "k_max",
    "d": "d",
    "tau": "tau",
    "tmax": "t_max",
    "t_max": "t_max",
}


@contextmanager
def reported_errors() -> Iterator[None]:
    """Print wavechar errors and exit with the status of their kind."""
    try:
        yield
    except InputError as e:
        console.error(str(e))
        raise typer.Exit(ExitCodes.input_error) from e
    except NumericError as e:
        console.error(str(e))
        raise typer.Exit(ExitCodes.numeric_error) from e


def parse_seeds(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise InputError(f"--seeds expects a comma-separated list of integers, got {text!r}") from e


def parse_variants(text: str) -> tuple[Variant, ...]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return tuple(Variant(name) for name in names)
    except ValueError as e:
        choices = ", ".join(v.value for v in Variant)
        raise InputError(f"--variants expects a comma-separated subset of {choices}, got {text!r}") from e


def parse_grid(entries: Sequence[str]) -> dict[str, list[float]]:
    grid: dict[str, list[float]] = {}
    for entry in entries:
        name, sep, values = entry.partition("=")
        if not sep or name.strip() not in GRID_PARAMETERS:
            raise InputError(f"--grid expects PARAM=V1,V2,... with PARAM in kmax, d, tau, tmax; got {entry!r}")
        param = GRID_PARAMETERS[name.strip()]
        try:
            parsed = [float(v) for v in values.split(",") if v.strip()]
        except ValueError as e:
            raise InputError(f"--grid {entry!r}: values must be numbers") from e
        if not parsed:
            raise InputError(f"--grid {entry!r}: no values given")
        grid.setdefault(param, []).extend(parsed)
    return grid


def load_run_configuration(path: pathlib.Path | None) -> ConfigurationR1 | None:
    if path is None:
        return None
    configuration = load_configuration(path)
    console.info(f"Using configuration from {path}")
    return configuration


def embedding_params(
    configuration: ConfigurationR1 | None,
    kmax: int | None,
    d: int | None,
    tau: float | None,
    tmax: float | None,
    variants: str | None,
) -> EmbeddingParams:
    """Flags override the configuration file, which overrides the defaults."""
    section = configuration.get("embedding", {}) if configuration else {}
    return EmbeddingParams(
        k_max=kmax if kmax is not None else section.get("k_max", Defaults.k_max),
        d=d if d is not None else section.get("d", Defaults.sample_points),
        tau=tau if tau is not None else section.get("tau", Defaults.tau),
        t_max=tmax if tmax is not None else section.get("t_max", Defaults.t_max),
        variants=(
            parse_variants(variants)
            if variants is not None
            else tuple(Variant(v) for v in section.get("variants", Defaults.variants))
        ),
    )


def eval_config(
    configuration: ConfigurationR1 | None,
    seeds: str | None,
    test_ratio: float | None,
    l2_strength: float | None,
) -> EvalConfig:
    section = configuration.get("evaluation", {}) if configuration else {}
    return EvalConfig(
        seeds=parse_seeds(seeds) if seeds is not None else tuple(section.get("seeds", Defaults.seeds)),
        test_ratio=test_ratio if test_ratio is not None else section.get("test_ratio", Defaults.test_ratio),
        l2_strength=l2_strength if l2_strength is not None else section.get("l2_strength", Defaults.l2_strength),
        max_iterations=section.get("max_iterations", Defaults.max_iterations),
        tolerance=section.get("tolerance", Defaults.tolerance),
    )


def sensitivity_grid(configuration: ConfigurationR1 | None, entries: Sequence[str] | None) -> dict[str, list[float]]:
    if entries:
        return parse_grid(entries)
    if configuration and "sensitivity" in configuration:
        return {param: list(values) for param, values in configuration["sensitivity"]["grid"].items()}
    raise InputError("no sensitivity grid given; pass --grid PARAM=V1,V2,... or a configuration with one")


def thread_count(threads: int | None) -> int:
    count = threads if threads is not None else Defaults.threads
    if count < 0:
        raise InputError(f"--threads must be 0 (all CPUs) or positive, got {count}")
    return count
