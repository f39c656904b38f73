"""
Worker pool and reproducible reductions.

Work is always cut into chunks whose boundaries depend only on the data and
EvalParams.chunk_size, never on the number of workers. Partial sums are
combined with math.fsum, which is correctly rounded and therefore independent
of the order in which chunks finish.
"""

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

from config.settings import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_MAX_WORKERS = 4


def worker_count() -> int:
    """Worker cap from LOCHMF_THREADS, else min(4, cpu count)."""
    configured = get_settings().threads
    if configured:
        return configured
    return max(1, min(DEFAULT_MAX_WORKERS, os.cpu_count() or 1))


def ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply fn to every item, returning results in input order.

    Args:
        fn: Pure function of one item
        items: Work items
        workers: Override for the pool size (default: worker_count())

    Returns:
        [fn(item) for item in items]
    """
    n_workers = workers or worker_count()
    if n_workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(n_workers, len(items))) as pool:
        return list(pool.map(fn, items))


def chunk_slices(total: int, chunk_size: int) -> List[slice]:
    """Fixed partition of range(total) into consecutive slices."""
    return [slice(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def deterministic_sum(values: Iterable[complex]) -> complex:
    """Correctly rounded sum of real or complex values."""
    vals = list(values)
    real = math.fsum(complex(v).real for v in vals)
    imag = math.fsum(complex(v).imag for v in vals)
    return complex(real, imag)
