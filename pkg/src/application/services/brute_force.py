"""
Brute Force - Unpruned enumeration of Kummer sets for small shapes.

Used as an independent oracle for the branch-and-bound search: it shares
only the criterion itself, not the tables, bounds or symmetry.
"""

import time
from typing import List, Optional, Tuple

from src.application.dtos.search_dtos import SearchConfig, SearchResult, StopReason
from src.application.services.kummer_criterion import extension_violation
from src.common.constants.search_constants import CapacityLimits
from src.common.exceptions.exceptions import CapacityError
from src.common.utils.logger import get_logger, log_search_event
from src.domain.interfaces.i_search_strategy import ISearchStrategy
from src.domain.models.algebra import AlgebraShape, ExponentVector, all_nonzero_vectors

logger = get_logger(__name__)


class BruteForceOracle(ISearchStrategy):
    """Depth-first enumeration of every Kummer set in candidate order."""

    @property
    def name(self) -> str:
        return "brute_force"

    def run(self, shape: AlgebraShape, config: Optional[SearchConfig] = None) -> SearchResult:
        """
        Exact maximum by full enumeration; ``config`` is ignored.

        Raises:
            CapacityError: If the shape has more than 255 nonzero vectors
        """
        candidates = all_nonzero_vectors(shape)
        if len(candidates) > CapacityLimits.ORACLE_MAX_CANDIDATES:
            raise CapacityError(
                f"brute force supports at most {CapacityLimits.ORACLE_MAX_CANDIDATES} candidates, "
                f"{shape.label} has {len(candidates)}")
        started = time.time()
        best: List[ExponentVector] = []
        members: List[ExponentVector] = []
        nodes = 0

        def descend(start: int) -> None:
            nonlocal best, nodes
            nodes += 1
            if len(members) > len(best):
                best = list(members)
            for i in range(start, len(candidates)):
                z = candidates[i]
                if extension_violation(shape, members, z) is None:
                    members.append(z)
                    descend(i + 1)
                    members.pop()

        descend(0)
        elapsed = time.time() - started
        log_search_event(logger, shape.label, f"brute force max {len(best)} over {nodes} sets")
        return SearchResult(shape, len(best), tuple(best), nodes, elapsed, True,
                            StopReason.EXHAUSTED, self.name)


def brute_force_oracle(shape: AlgebraShape) -> SearchResult:
    """Exact maximum Kummer set by exhaustive enumeration."""
    return BruteForceOracle().run(shape)


def enumerate_maximal_sets(shape: AlgebraShape) -> List[Tuple[ExponentVector, ...]]:
    """
    All inclusion-maximal Kummer sets of a single-factor shape.

    Returns:
        Sets in canonical member order, listed in enumeration order

    Raises:
        CapacityError: If the shape has more than one tensor factor
    """
    if shape.factors > CapacityLimits.ENUMERATION_MAX_FACTORS:
        raise CapacityError(f"maximal-set enumeration needs n=1, got {shape.label}")
    candidates = all_nonzero_vectors(shape)
    found: List[Tuple[ExponentVector, ...]] = []
    members: List[ExponentVector] = []

    def is_maximal() -> bool:
        return all(z in members or extension_violation(shape, members, z) is not None
                   for z in candidates)

    def descend(start: int) -> None:
        extended = False
        for i in range(start, len(candidates)):
            z = candidates[i]
            if extension_violation(shape, members, z) is None:
                extended = True
                members.append(z)
                descend(i + 1)
                members.pop()
        if members and not extended and is_maximal():
            found.append(tuple(members))

    descend(0)
    logger.info(f"{len(found)} maximal Kummer sets for {shape.label}")
    return found
