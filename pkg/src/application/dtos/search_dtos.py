"""
Data Transfer Objects for the maximum Kummer-set search.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from src.common.config.app_config import SearchSettings
from src.common.constants.search_constants import CapacityLimits, SearchDefaults
from src.common.exceptions.exceptions import InvalidSearchConfigError
from src.domain.models.algebra import AlgebraShape, ExponentVector


class StopReason:
    """Why a search returned."""
    EXHAUSTED = "exhausted"
    BUDGET = "budget"
    TARGET = "target"


@dataclass(frozen=True)
class SearchConfig:
    """
    Options for one max_kummer_dimension run.

    Attributes:
        use_symmetry: Prune with symplectic orbits
        symmetry_depth: 0 (off), 1 (first vector) or 2 (first two vectors)
        deterministic: Run single-process in candidate order
        time_budget: Seconds before the search gives up, None for unbounded
        target: Stop as soon as a set of this size is found
        max_workers: Cap on worker processes, None for the CPU count
        orbit_state_cap: Largest orbit closure attempted
        progress_interval: Nodes between progress log lines
    """
    use_symmetry: bool = SearchDefaults.USE_SYMMETRY
    symmetry_depth: int = SearchDefaults.SYMMETRY_DEPTH
    deterministic: bool = SearchDefaults.DETERMINISTIC
    time_budget: Optional[float] = SearchDefaults.TIME_BUDGET
    target: Optional[int] = None
    max_workers: Optional[int] = None
    orbit_state_cap: int = CapacityLimits.ORBIT_STATE_CAP
    progress_interval: int = SearchDefaults.PROGRESS_INTERVAL

    def __post_init__(self):
        if self.time_budget is not None and not self.time_budget > 0:
            raise InvalidSearchConfigError(f"time budget must be positive, got {self.time_budget}")
        if self.target is not None and self.target < 1:
            raise InvalidSearchConfigError(f"target must be positive, got {self.target}")
        if self.max_workers is not None and self.max_workers < 1:
            raise InvalidSearchConfigError(f"max_workers must be positive, got {self.max_workers}")
        if self.symmetry_depth not in SearchDefaults.SYMMETRY_DEPTHS:
            raise InvalidSearchConfigError(
                f"symmetry depth must be one of {SearchDefaults.SYMMETRY_DEPTHS}, got {self.symmetry_depth}")
        if self.progress_interval < 1:
            raise InvalidSearchConfigError("progress interval must be positive")

    @property
    def effective_depth(self) -> int:
        return self.symmetry_depth if self.use_symmetry else 0

    @classmethod
    def from_settings(cls, settings: SearchSettings, **overrides) -> 'SearchConfig':
        """Build from persisted settings; keyword overrides win when not None."""
        values = {
            "use_symmetry": settings.use_symmetry,
            "symmetry_depth": settings.symmetry_depth,
            "deterministic": settings.deterministic,
            "time_budget": settings.time_budget,
            "max_workers": settings.max_workers,
            "orbit_state_cap": settings.orbit_state_cap,
            "progress_interval": settings.progress_interval,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of a maximum Kummer-set search.

    When ``complete`` is True, ``max_size`` is the true maximum; otherwise it
    is the best lower bound found. ``witness`` is always a Kummer set of
    size ``max_size``.
    """
    shape: AlgebraShape
    max_size: int
    witness: Tuple[ExponentVector, ...]
    explored_nodes: int
    elapsed: float
    complete: bool
    stop_reason: str = StopReason.EXHAUSTED
    strategy: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.shape.degree,
            "n": self.shape.factors,
            "max_size": self.max_size,
            "witness": [list(v.entries) for v in self.witness],
            "explored_nodes": self.explored_nodes,
            "elapsed_ms": int(round(self.elapsed * 1000)),
            "complete": self.complete,
            "stop_reason": self.stop_reason,
            "strategy": self.strategy,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SearchResult':
        shape = AlgebraShape(int(data["d"]), int(data["n"]))
        return cls(
            shape=shape,
            max_size=int(data["max_size"]),
            witness=tuple(shape.vector(v) for v in data["witness"]),
            explored_nodes=int(data["explored_nodes"]),
            elapsed=data["elapsed_ms"] / 1000.0,
            complete=bool(data["complete"]),
            stop_reason=data.get("stop_reason", StopReason.EXHAUSTED),
            strategy=data.get("strategy", ""),
        )
