from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def worker_count() -> int:
    """Worker processes to use; ``SWAPSMITH_THREADS`` caps the CPU count."""
    n = os.cpu_count() or 1
    env = os.environ.get("SWAPSMITH_THREADS")
    if env:
        try:
            n = min(n, max(1, int(env)))
        except ValueError:
            pass
    return n


def ordered_map(fn, items, workers: int | None = None, chunksize: int = 16) -> list:
    """``list(map(fn, items))``, fanned out over processes when more than one worker.

    Results always come back in input order.
    """
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
