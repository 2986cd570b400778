# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import os
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import TypeVar

from threadpoolctl import threadpool_limits

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: int) -> int:
    """0 means one worker per CPU; anything else is capped to the CPU count."""
    cpu_count = os.cpu_count() or 1
    if workers <= 0:
        return cpu_count
    return min(workers, cpu_count)


def _single_threaded_blas() -> None:
    threadpool_limits(limits=1)


def ordered_map(
    fn: Callable[[T], R],
    items: Sequence[T],
    workers: int = 1,
    processes: bool = True,
    chunksize: int = 0,
) -> Iterator[R]:
    """Apply ``fn`` to every item and yield results in input order.

    BLAS is pinned to a single thread in every code path, so the numbers
    produced are the same whatever ``workers`` is. ``fn`` must be picklable
    when ``processes`` is set.
    """
    workers = resolve_workers(workers)
    if workers == 1 or len(items) <= 1:
        with threadpool_limits(limits=1):
            for item in items:
                yield fn(item)
        return

    if processes:
        if chunksize <= 0:
            chunksize = max(1, len(items) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers, initializer=_single_threaded_blas) as executor:
            yield from executor.map(fn, items, chunksize=chunksize)
        return

    with threadpool_limits(limits=1), ThreadPoolExecutor(max_workers=workers) as executor:
        yield from executor.map(fn, items)
