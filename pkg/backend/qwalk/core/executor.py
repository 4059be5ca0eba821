"""Thread-pool runner for independent pair decisions"""

import contextvars
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from qwalk.core.exceptions import ParameterError
from qwalk.core.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class BatchRunner:
    """Run a function over many inputs, optionally on worker threads

    Results are returned in input order regardless of completion order.
    Workers run in a copy of the caller's context, so bound log values follow them.
    """

    def __init__(self, jobs: int = 1) -> None:
        if jobs < 1:
            raise ParameterError("jobs must be at least 1", jobs=jobs)
        self.jobs = jobs

    def map(self, task: Callable[[T], R], items: Sequence[T]) -> list[R]:
        """
        Apply task to every item.

        Args:
            task: Pure function; must only read shared state
            items: Inputs, e.g. (u, v) pairs

        Returns:
            list of results aligned with items
        """
        started = time.perf_counter()
        if self.jobs == 1 or len(items) < 2:
            results = [task(item) for item in items]
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                futures = [pool.submit(contextvars.copy_context().run, task, item) for item in items]
                results = [future.result() for future in futures]

        logger.debug(
            "Batch finished",
            task=getattr(task, "__name__", repr(task)),
            items=len(items),
            jobs=self.jobs,
            elapsed_seconds=round(time.perf_counter() - started, 4),
        )
        return results
