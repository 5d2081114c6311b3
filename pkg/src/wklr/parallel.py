"""Order-preserving fan-out over worker threads."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable


def ordered_map(fn: Callable, jobs: list, threads: int = 1) -> list:
    """Map in input order; threads only change the scheduling."""
    if threads <= 1:
        return [fn(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, jobs))
