"""Work pool for independent runs."""


from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
import threading
from typing import TYPE_CHECKING

from tqdm import tqdm

from .config import SpdConfig

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence


# set on pool threads while they run a task
_worker = threading.local()


def in_worker() -> bool:
    """Whether the calling thread is running a task of an `ordered_map` pool."""
    return getattr(_worker, 'active', False)


def ordered_map[T, R](fn: Callable[[T], R], items: Sequence[T], *,
                      max_workers: int | None = None, desc: str | None = None, progress: bool = False) -> list[R]:
    """Apply `fn` to every item on a thread pool and return results in input order.

    LAPACK calls release the GIL, so threads give real parallelism for the dense kernels
    while keeping every result addressable by its input index.
    Calls made from inside a pool task run serially on the calling thread, so nesting never
    multiplies the number of threads.
    """
    workers: int = 1 if in_worker() else max_workers or SpdConfig.MAX_WORKERS

    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in tqdm(items, desc=desc, disable=not progress)]

    def task(item: T) -> R:
        _worker.active = True
        try:
            return fn(item)
        finally:
            _worker.active = False

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(tqdm(pool.map(task, items), total=len(items), desc=desc, disable=not progress))
