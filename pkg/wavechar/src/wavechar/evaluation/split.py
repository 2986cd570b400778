# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from wavechar.errors import InputError

_RAW_RANGE = 1 << 64


class Split(NamedTuple):
    train: NDArray[np.int64]
    test: NDArray[np.int64]


def _bounded(bit_generator: np.random.PCG64, bound: int) -> int:
    """Uniform integer in ``[0, bound)`` by rejection on raw 64-bit draws."""
    limit = _RAW_RANGE - (_RAW_RANGE % bound)
    while True:
        raw = int(bit_generator.random_raw())
        if raw < limit:
            return raw % bound


def derive_seed(seed: int, attempt: int) -> int:
    """Seed for retry ``attempt`` of ``seed``; attempt 0 is ``seed`` itself."""
    if attempt == 0:
        return seed
    state = np.random.SeedSequence([seed, attempt]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def train_test_split(n: int, test_ratio: float, seed: int) -> Split:
    """Fisher-Yates shuffle of ``0..n-1`` driven by PCG64 seeded with ``seed``.

    The first ``round(n * test_ratio)`` shuffled indices, clamped to
    ``1..n-1``, form the test side. Both sides are returned ascending.
    """
    if n < 2:
        raise InputError(f"need at least 2 examples to split, got {n}")
    if not 0.0 < test_ratio < 1.0:
        raise InputError(f"test ratio must lie strictly between 0 and 1, got {test_ratio}")
    if seed < 0:
        raise InputError(f"seed must be non-negative, got {seed}")

    bit_generator = np.random.PCG64(seed)
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = _bounded(bit_generator, i + 1)
        order[i], order[j] = order[j], order[i]

    test_size = min(max(round(n * test_ratio), 1), n - 1)
    return Split(
        train=np.sort(np.array(order[test_size:], dtype=np.int64)),
        test=np.sort(np.array(order[:test_size], dtype=np.int64)),
    )
