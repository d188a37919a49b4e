"""
Branch and Bound - Exact maximum Kummer-set search.

The search grows Kummer sets one candidate at a time. Each node keeps the
bitset of candidates that can still be added; a greedy partition of that
bitset into classes of pairwise incompatible vectors bounds how far the node
can grow. Symplectic symmetry fixes the first one or two members up to orbit.
"""

import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.application.dtos.search_dtos import SearchConfig, SearchResult, StopReason
from src.application.services.construction import standard_basis
from src.application.services.kummer_criterion import is_kummer_set
from src.application.services.search_tables import SearchTables
from src.application.services.symmetry import OrbitStructure
from src.common.constants.app_constants import ThreadSettings
from src.common.constants.search_constants import SearchDefaults
from src.common.exceptions.exceptions import SearchException
from src.common.utils.bitsets import mask_to_positions
from src.common.utils.logger import get_logger, log_search_event
from src.domain.interfaces.i_search_strategy import ISearchStrategy
from src.domain.models.algebra import AlgebraShape
from src.infrastructure.parallel.worker_pool import (
    LocalBest,
    SharedBest,
    WorkerPool,
    resolve_worker_count,
)

logger = get_logger(__name__)

Task = Tuple[Tuple[int, ...], int]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class BranchOutcome:
    """Result of exploring one task."""
    size: int
    witness: Optional[Tuple[int, ...]]
    nodes: int
    status: str


class _SearchStopped(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class BranchExplorer:
    """
    Depth-first exploration of the Kummer sets extending a task prefix.

    Args:
        tables: Search tables of the shape
        best: LocalBest or SharedBest; sizes at or below it are pruned
        deadline: Epoch seconds after which the search stops, or None
        target: Size that ends the search as soon as it is reached
        progress_interval: Nodes between progress log lines
    """

    def __init__(self, tables: SearchTables, best, deadline: Optional[float] = None,
                 target: Optional[int] = None,
                 progress_interval: int = SearchDefaults.PROGRESS_INTERVAL):
        self.tables = tables
        self.best = best
        self.deadline = deadline
        self.target = target
        self.progress_interval = progress_interval
        self.nodes = 0
        self._found: Optional[Tuple[int, ...]] = None

    def explore(self, prefix: Sequence[int], mask: int) -> BranchOutcome:
        self.nodes = 0
        self._found = None
        status = StopReason.EXHAUSTED
        members = list(prefix)
        try:
            if self.deadline is not None and time.time() > self.deadline:
                raise _SearchStopped(StopReason.BUDGET)
            if len(members) > self.best.get():
                self._record(members)
            if len(members) + popcount(mask) > self.best.get():
                self._expand(members, mask)
        except _SearchStopped as stop:
            status = stop.reason
        size = len(self._found) if self._found else 0
        return BranchOutcome(size, self._found, self.nodes, status)

    def _record(self, members: List[int]) -> None:
        if self.best.offer(len(members)):
            self._found = tuple(members)
        if self.target is not None and len(members) >= self.target:
            if self._found is None or len(self._found) < len(members):
                self._found = tuple(members)
            raise _SearchStopped(StopReason.TARGET)

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & SearchDefaults.DEADLINE_CHECK_MASK:
            if time.time() > self.deadline:
                raise _SearchStopped(StopReason.BUDGET)
        if not self.nodes % self.progress_interval:
            log_search_event(logger, self.tables.shape.label,
                             f"{self.nodes} nodes, best {self.best.get()}")

    def _expand(self, members: List[int], mask: int) -> None:
        tables = self.tables
        for v, color in reversed(tables.greedy_coloring(mask)):
            if len(members) + color <= self.best.get():
                return
            self._tick()
            extended = mask & tables.extension_mask(members, v)
            members.append(v)
            if len(members) > self.best.get():
                self._record(members)
            if extended:
                self._expand(members, extended)
            members.pop()
            mask &= ~(1 << v)


def build_tasks(tables: SearchTables, depth: int,
                orbits: Optional[OrbitStructure] = None) -> Tuple[List[Task], int]:
    """
    Split the search into independent subtrees.

    Every Kummer set of size two or more is, up to symmetry, covered by
    exactly the tasks returned: with depth 0 a task fixes the smallest
    member; with depth 1 the first member is an orbit representative and
    earlier orbits are excluded; with depth 2 the second member is a
    representative of its stabilizer orbit as well.

    Returns:
        (tasks, effective depth) where each task is (prefix, candidate mask)
    """
    count = tables.count
    reps = orbits.representatives() if (orbits is not None and depth > 0) else None
    if reps is None:
        tasks = [((v,), tables.pair[v] & ~((1 << (v + 1)) - 1)) for v in range(count)]
        return tasks, 0

    tasks: List[Task] = []
    effective = depth
    excluded = 0
    for r in reps:
        available = tables.pair[r] & ~excluded
        classes = None
        if depth >= 2:
            classes = orbits.stabilizer_classes(r, mask_to_positions(available))
            if classes is None:
                effective = 1
        if classes is None:
            tasks.append(((r,), available))
        else:
            done = 0
            for y, class_mask in classes:
                tasks.append(((r, y), available & ~done & tables.extension_mask([r], y)))
                done |= class_mask
        excluded |= orbits.orbit_mask(r)
    return tasks, effective


_worker_explorer: Optional[BranchExplorer] = None


def _init_worker(shape: AlgebraShape, shared_value, deadline: Optional[float],
                 target: Optional[int], progress_interval: int) -> None:
    global _worker_explorer
    _worker_explorer = BranchExplorer(SearchTables(shape), SharedBest(shared_value),
                                      deadline, target, progress_interval)


def _explore_task(task: Task) -> BranchOutcome:
    prefix, mask = task
    return _worker_explorer.explore(prefix, mask)


class BranchAndBoundSearch(ISearchStrategy):
    """Exact search with coloring bounds, symmetry breaking and worker processes."""

    @property
    def name(self) -> str:
        return "branch_and_bound"

    def run(self, shape: AlgebraShape, config: Optional[SearchConfig] = None) -> SearchResult:
        """
        Find a largest Kummer set.

        Starts from the standard basis as incumbent, so the result is never
        below dn + 1.
        """
        config = config or SearchConfig()
        started = time.time()
        deadline = started + config.time_budget if config.time_budget else None

        incumbent = [shape.index_of(v) - 1 for v in standard_basis(shape)]
        if config.target is not None and config.target <= len(incumbent):
            log_search_event(logger, shape.label, "target met by the standard basis")
            return self._result(shape, tuple(incumbent), 0, started, False, StopReason.TARGET)

        tables = SearchTables(shape)
        orbits = OrbitStructure(shape, config.orbit_state_cap) if config.effective_depth else None
        tasks, depth = build_tasks(tables, config.effective_depth, orbits)
        log_search_event(logger, shape.label,
                         f"{tables.count} candidates, {len(tasks)} tasks at symmetry depth {depth}, "
                         f"incumbent {len(incumbent)}")

        workers = resolve_worker_count(config.max_workers, len(tasks))
        if config.deterministic or workers <= 1 or len(tasks) < ThreadSettings.PARALLEL_MIN_TASKS:
            outcomes = self._run_serial(tables, tasks, len(incumbent), deadline, config)
        else:
            outcomes = self._run_parallel(shape, tasks, len(incumbent), deadline, config, workers)

        best = tuple(incumbent)
        for outcome in outcomes:
            if outcome.witness is not None and len(outcome.witness) > len(best):
                best = outcome.witness
        statuses = {o.status for o in outcomes}
        if StopReason.TARGET in statuses:
            reason = StopReason.TARGET
        elif StopReason.BUDGET in statuses or len(outcomes) < len(tasks):
            reason = StopReason.BUDGET
        else:
            reason = StopReason.EXHAUSTED
        nodes = sum(o.nodes for o in outcomes)
        return self._result(shape, best, nodes, started, reason == StopReason.EXHAUSTED, reason)

    def _run_serial(self, tables: SearchTables, tasks: List[Task], incumbent: int,
                    deadline: Optional[float], config: SearchConfig) -> List[BranchOutcome]:
        explorer = BranchExplorer(tables, LocalBest(incumbent), deadline,
                                  config.target, config.progress_interval)
        outcomes = []
        for prefix, mask in tasks:
            outcome = explorer.explore(prefix, mask)
            outcomes.append(outcome)
            if outcome.status != StopReason.EXHAUSTED:
                break
        return outcomes

    def _run_parallel(self, shape: AlgebraShape, tasks: List[Task], incumbent: int,
                      deadline: Optional[float], config: SearchConfig,
                      workers: int) -> List[BranchOutcome]:
        log_search_event(logger, shape.label, f"dispatching to {workers} worker processes")
        best = SharedBest.create(incumbent)
        pool = WorkerPool(workers, _init_worker,
                          (shape, best.raw, deadline, config.target, config.progress_interval))
        with pool:
            return pool.run(_explore_task, tasks,
                            stop=lambda outcome: outcome.status == StopReason.TARGET)

    def _result(self, shape: AlgebraShape, positions: Tuple[int, ...], nodes: int,
                started: float, complete: bool, reason: str) -> SearchResult:
        witness = tuple(shape.from_index(p + 1) for p in sorted(positions))
        violation = is_kummer_set(shape, witness)
        if violation is not None:
            raise SearchException(
                f"search witness of size {len(witness)} failed the Kummer re-check: {violation.to_dict()}")
        elapsed = time.time() - started
        log_search_event(logger, shape.label,
                         f"max size {len(witness)} ({reason}) after {nodes} nodes in {elapsed:.2f}s")
        return SearchResult(shape, len(witness), witness, nodes, elapsed, complete, reason, self.name)
