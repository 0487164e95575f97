"""Order-preserving parallel map over worker processes.

Library code takes a `workers` count and stays agnostic of the execution
substrate; results always come back in input order, so parallel runs are
byte-for-byte reproducible against serial ones.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

log = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """Map fn over items, serially for workers in (None, 0, 1), else via a process pool.

    fn must be picklable (module-level).  Falls back to serial execution with a
    warning if the platform refuses to start a pool.
    """
    seq: Sequence[T] = list(items)
    if workers is None or workers <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    try:
        with ProcessPoolExecutor(max_workers=min(workers, len(seq))) as pool:
            chunk = max(1, len(seq) // (workers * 4))
            return list(pool.map(fn, seq, chunksize=chunk))
    except (OSError, PermissionError) as e:
        log.warning("process pool unavailable (%s); running serially", e)
        return [fn(x) for x in seq]
