"""
Search Service - Entry points for the maximum Kummer-set computations.
"""

from typing import Optional

from src.application.dtos.search_dtos import SearchConfig, SearchResult
from src.application.services.branch_and_bound import BranchAndBoundSearch
from src.common.exceptions.exceptions import KummerLabException, SearchException
from src.common.utils.logger import get_logger
from src.domain.interfaces.i_search_strategy import ISearchStrategy
from src.domain.models.algebra import AlgebraShape

logger = get_logger(__name__)


def run_strategy(strategy: ISearchStrategy, shape: AlgebraShape,
                 config: Optional[SearchConfig] = None) -> SearchResult:
    """
    Run a search strategy, converting unexpected failures to SearchException.

    Raises:
        KummerLabException: Domain errors pass through unchanged
        SearchException: Anything else, logged with its traceback
    """
    try:
        return strategy.run(shape, config)
    except KummerLabException:
        raise
    except Exception as e:
        logger.error(f"{strategy.name} failed on {shape.label}: {e}", exc_info=True)
        raise SearchException(f"{strategy.name} failed on {shape.label}: {e}") from e


def max_kummer_dimension(shape: AlgebraShape,
                         config: Optional[SearchConfig] = None) -> SearchResult:
    """
    Largest monomial Kummer set of the shape.

    Args:
        shape: Algebra shape
        config: Search options; defaults when None

    Returns:
        SearchResult: complete=False when the time budget ran out or the
        target stopped the run; the witness is certified either way
    """
    return run_strategy(BranchAndBoundSearch(), shape, config)
