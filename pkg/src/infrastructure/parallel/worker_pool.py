"""
Worker Pool - Process pool with a shared best-size cell.

Workers are initialized once with the heavy per-shape state, then fed
independent tasks. A shared integer lets every worker prune against the
best size found anywhere.
"""

import multiprocessing
import os
from concurrent.futures import FIRST_COMPLETED, Future, ProcessPoolExecutor, wait
from typing import Any, Callable, Iterable, List, Optional, Sequence

from src.common.config.app_config import threads_from_environment
from src.common.constants.app_constants import ThreadSettings
from src.common.utils.logger import get_logger

logger = get_logger(__name__)


class LocalBest:
    """Best-size cell for single-process runs."""

    def __init__(self, initial: int):
        self._value = initial

    def get(self) -> int:
        return self._value

    def offer(self, size: int) -> bool:
        if size > self._value:
            self._value = size
            return True
        return False


class SharedBest:
    """Best-size cell backed by a multiprocessing Value."""

    def __init__(self, value):
        self._value = value

    @classmethod
    def create(cls, initial: int, context=None) -> 'SharedBest':
        ctx = context or multiprocessing.get_context()
        return cls(ctx.Value("i", initial))

    @property
    def raw(self):
        return self._value

    def get(self) -> int:
        return self._value.value

    def offer(self, size: int) -> bool:
        with self._value.get_lock():
            if size > self._value.value:
                self._value.value = size
                return True
        return False


def resolve_worker_count(requested: Optional[int], task_count: int) -> int:
    """
    Number of worker processes for a run.

    The smallest of the requested cap, KUMMER_THREADS, the CPU count and the
    number of tasks; never below one.
    """
    limits = [os.cpu_count() or ThreadSettings.MIN_WORKERS, max(task_count, 1)]
    if requested is not None:
        limits.append(requested)
    env_cap = threads_from_environment()
    if env_cap is not None:
        limits.append(env_cap)
    return max(ThreadSettings.MIN_WORKERS, min(limits))


class WorkerPool:
    """
    Runs tasks on a ProcessPoolExecutor whose workers share state built by an initializer.

    Args:
        max_workers: Number of processes
        initializer: Called once per worker with ``initargs``
        initargs: Arguments for the initializer (may include shared Values)
    """

    def __init__(self, max_workers: int, initializer: Callable[..., None],
                 initargs: Sequence[Any] = (), context=None):
        self._max_workers = max_workers
        self._initializer = initializer
        self._initargs = tuple(initargs)
        self._context = context or multiprocessing.get_context()
        self._executor: Optional[ProcessPoolExecutor] = None

    def __enter__(self) -> 'WorkerPool':
        self._executor = ProcessPoolExecutor(
            max_workers=self._max_workers,
            mp_context=self._context,
            initializer=self._initializer,
            initargs=self._initargs,
        )
        logger.debug(f"worker pool started with {self._max_workers} processes")
        return self

    def __exit__(self, exc_type, exc, tb):
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None
        return False

    def run(self, fn: Callable[[Any], Any], tasks: Iterable[Any],
            stop: Optional[Callable[[Any], bool]] = None) -> List[Any]:
        """
        Run ``fn`` on every task and collect results in completion order.

        Args:
            fn: Picklable module-level function
            tasks: Picklable task arguments
            stop: Predicate on a result; when it returns True, pending tasks
                are cancelled

        Returns:
            Results of the tasks that ran
        """
        if self._executor is None:
            raise RuntimeError("WorkerPool must be used as a context manager")
        pending = {self._executor.submit(fn, task) for task in tasks}
        results: List[Any] = []
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                if future.cancelled():
                    continue
                result = future.result()
                results.append(result)
                if stop is not None and stop(result):
                    self._cancel(pending)
                    pending = {f for f in pending if not f.cancelled()}
        return results

    @staticmethod
    def _cancel(futures: Iterable[Future]) -> None:
        cancelled = sum(1 for f in futures if f.cancel())
        if cancelled:
            logger.debug(f"cancelled {cancelled} queued tasks")
