"""Schedule-independent execution of per-replicate work."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def map_replicates(fn: Callable[[int], T], indices: Sequence[int], threads: int = 1) -> list[T]:
    """Apply ``fn`` to every replicate index; results come back in index order.

    ``fn`` must derive all randomness from its index, which makes the output
    identical for any thread count.
    """
    indices = list(indices)
    if threads <= 1 or len(indices) < 2:
        return [fn(i) for i in indices]
    chunk = max(1, len(indices) // (4 * threads))
    blocks = [indices[k:k + chunk] for k in range(0, len(indices), chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda block: [fn(i) for i in block], blocks)
        return [value for part in parts for value in part]
