# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import ClassVar

from wavechar.constants import Defaults
from wavechar.errors import InputError
from wavechar.similarity import Variant


def _default_variants() -> tuple[Variant, ...]:
    return tuple(Variant(name) for name in Defaults.variants)


@dataclass(frozen=True)
class EmbeddingParams:
    k_max: int = Defaults.k_max
    d: int = Defaults.sample_points
    tau: float = Defaults.tau
    t_max: float = Defaults.t_max
    variants: tuple[Variant, ...] = field(default_factory=_default_variants)

    sweepable: ClassVar[tuple[str, ...]] = ("k_max", "d", "tau", "t_max")

    def __post_init__(self) -> None:
        if isinstance(self.k_max, bool) or not isinstance(self.k_max, int) or self.k_max < 1:
            raise InputError(f"k_max must be an integer >= 1, got {self.k_max!r}")
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise InputError(f"d must be an integer >= 1, got {self.d!r}")
        if not self.tau > 0:
            raise InputError(f"tau must be positive, got {self.tau!r}")
        if not self.t_max > 0:
            raise InputError(f"t_max must be positive, got {self.t_max!r}")

        try:
            variants = tuple(Variant(v) for v in self.variants)
        except ValueError as e:
            raise InputError(f"unknown transition variant in {list(self.variants)!r}") from e
        if not variants or len(set(variants)) != len(variants):
            raise InputError("variants must be a non-empty list without repeats")
        object.__setattr__(self, "variants", variants)

    def dimension(self, num_features: int) -> int:
        return len(self.variants) * self.k_max * num_features * self.d * 2

    def with_value(self, name: str, value: float) -> EmbeddingParams:
        if name not in self.sweepable:
            raise InputError(f"cannot sweep {name!r}; choose one of {', '.join(self.sweepable)}")
        if name in ("k_max", "d"):
            if float(value) != int(value):
                raise InputError(f"{name} must be an integer, got {value!r}")
            return dataclasses.replace(self, **{name: int(value)})
        return dataclasses.replace(self, **{name: float(value)})
