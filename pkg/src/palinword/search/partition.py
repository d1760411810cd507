"""
Ordered parallel map over independent subtrees.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> List[R]:
    """Apply ``fn`` to every item, results in input order.

    ``fn`` must be picklable (a module-level function) when ``jobs > 1``.
    """
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    workers = min(jobs, len(items))
    logger.debug(f"Running {len(items)} subtrees on {workers} processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
