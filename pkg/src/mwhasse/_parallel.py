from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def map_ordered(fn, items, workers: int = 1):
    """``list(map(fn, items))``, optionally fanned out over processes.

    Output order always follows ``items``.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
