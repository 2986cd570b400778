# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from dataclasses import dataclass

from wavechar.constants import Defaults
from wavechar.errors import InputError


@dataclass(frozen=True)
class EvalConfig:
    seeds: tuple[int, ...] = Defaults.seeds
    test_ratio: float = Defaults.test_ratio
    # inverse regularization: larger means weaker
    l2_strength: float = Defaults.l2_strength
    max_iterations: int = Defaults.max_iterations
    tolerance: float = Defaults.tolerance
    max_split_retries: int = Defaults.max_split_retries

    def __post_init__(self) -> None:
        seeds = tuple(self.seeds)
        if not seeds:
            raise InputError("at least one seed is required")
        if any(isinstance(s, bool) or not isinstance(s, int) or s < 0 for s in seeds):
            raise InputError(f"seeds must be non-negative integers, got {list(seeds)}")
        if len(set(seeds)) != len(seeds):
            raise InputError(f"seeds must be distinct, got {list(seeds)}")
        object.__setattr__(self, "seeds", seeds)

        if not 0.0 < self.test_ratio < 1.0:
            raise InputError(f"test ratio must lie strictly between 0 and 1, got {self.test_ratio}")
        if not self.l2_strength > 0:
            raise InputError(f"l2 strength must be positive, got {self.l2_strength}")
        if self.max_iterations < 1:
            raise InputError(f"max iterations must be at least 1, got {self.max_iterations}")
        if not self.tolerance > 0:
            raise InputError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_split_retries < 0:
            raise InputError(f"split retries must be non-negative, got {self.max_split_retries}")
