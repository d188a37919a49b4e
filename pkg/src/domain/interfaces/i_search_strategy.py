"""
Search Strategy Interface - Contract for maximum Kummer-set searches.

Implementations differ in how they explore candidate sets; all of them
return a self-certifying result whose witness passes is_kummer_set.
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Optional

from src.domain.models.algebra import AlgebraShape

if TYPE_CHECKING:
    from src.application.dtos.search_dtos import SearchConfig, SearchResult


class ISearchStrategy(ABC):
    """Abstract base class for maximum Kummer-set searches."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Short identifier reported in results."""
        pass

    @abstractmethod
    def run(self, shape: AlgebraShape, config: Optional['SearchConfig'] = None) -> 'SearchResult':
        """
        Search for a largest Kummer set of the shape.

        Args:
            shape: Algebra shape
            config: Search options; defaults when None

        Returns:
            SearchResult

        Raises:
            CapacityError: If the strategy cannot handle the shape
        """
        pass
