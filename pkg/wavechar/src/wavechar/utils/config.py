# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import json
import pathlib
from typing import NotRequired, TypedDict, cast

import jsonschema
import yaml

from wavechar.constants import Defaults
from wavechar.constants.paths import JsonSchemas
from wavechar.errors import InputError


class EmbeddingSection(TypedDict, total=False):
    k_max: int
    d: int
    tau: float
    t_max: float
    variants: list[str]


class EvaluationSection(TypedDict, total=False):
    seeds: list[int]
    test_ratio: float
    l2_strength: float
    max_iterations: int
    tolerance: float


class SensitivitySection(TypedDict):
    grid: dict[str, list[float]]


class ConfigurationR1(TypedDict):
    revision: int
    embedding: NotRequired[EmbeddingSection]
    evaluation: NotRequired[EvaluationSection]
    sensitivity: NotRequired[SensitivitySection]


def load_schema_r1() -> object:
    with JsonSchemas.config_r1.open("r", encoding="utf-8") as f:
        schema: object = json.load(f)
    return schema


def validate_configuration(data: object, source: str) -> ConfigurationR1:
    if not isinstance(data, dict):
        raise InputError(f"{source}: configuration is not a YAML mapping")

    if data.get("revision") != 1:
        raise InputError(f"{source}: unsupported configuration revision {data.get('revision')!r}")

    try:
        jsonschema.validate(instance=data, schema=load_schema_r1())  # type: ignore[arg-type]
    except jsonschema.ValidationError as e:
        path = ".".join(str(p) for p in e.path) or "<root>"
        raise InputError(f"{source}: config validation failed at {path}: {e.message}") from e
    except jsonschema.SchemaError as e:
        raise InputError(f"schema error in {JsonSchemas.config_r1}: {e.message}") from e

    return cast(ConfigurationR1, data)


def load_configuration(path: pathlib.Path) -> ConfigurationR1:
    if not path.exists():
        raise InputError(f"{path}: configuration file does not exist")

    try:
        with path.open("r", encoding="utf-8") as f:
            data: object = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise InputError(f"{path}: malformed YAML: {e}") from e
    except OSError as e:
        raise InputError(f"{path}: cannot read configuration: {e}") from e

    return validate_configuration(data, str(path))


def default_configuration() -> ConfigurationR1:
    defaults = Defaults()
    return {
        "revision": 1,
        "embedding": {
            "k_max": defaults.k_max,
            "d": defaults.sample_points,
            "tau": defaults.tau,
            "t_max": defaults.t_max,
            "variants": list(defaults.variants),
        },
        "evaluation": {
            "seeds": list(defaults.seeds),
            "test_ratio": defaults.test_ratio,
            "l2_strength": defaults.l2_strength,
            "max_iterations": defaults.max_iterations,
            "tolerance": defaults.tolerance,
        },
    }


def save_configuration(config: ConfigurationR1, path: pathlib.Path) -> None:
    validate_configuration(config, str(path))

    try:
        with path.open("w", encoding="utf-8") as f:
            yaml.safe_dump(dict(config), f, default_flow_style=False, sort_keys=False)
    except OSError as e:
        raise InputError(f"{path}: cannot write configuration: {e}") from e
