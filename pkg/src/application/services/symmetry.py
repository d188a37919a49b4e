"""
Symmetry - Orbits of symplectic maps on exponent vectors.

The Kummer predicate only sees phases and exponent sums, so any linear map
of (Z/d)^{2n} preserving the symplectic phase maps Kummer sets to Kummer
sets. Orbits are computed exactly as connected components of the Schreier
graph of a generating set of transvections x -> x + phase(x, h) h.
"""

from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from src.common.constants.search_constants import CapacityLimits
from src.common.utils.bitsets import positions_to_mask
from src.common.utils.logger import get_logger
from src.domain.models.algebra import AlgebraShape, ExponentVector, vector_matrix

logger = get_logger(__name__)


def transvection_matrix(shape: AlgebraShape, h: ExponentVector) -> np.ndarray:
    """
    Matrix of x -> x + phase(x, h) h acting on row vectors.

    Returns:
        np.ndarray: M with x M = x + (x J h^T) h (mod d)
    """
    hv = np.array(shape.check(h).entries, dtype=np.int64)
    column = shape.symplectic_form @ hv
    return (np.eye(shape.length, dtype=np.int64) + np.outer(column, hv)) % shape.degree


def symplectic_generators(shape: AlgebraShape) -> List[np.ndarray]:
    """Transvections along every e_i and every e_i + e_j."""
    units = [shape.unit(i) for i in range(shape.length)]
    directions = list(units)
    directions += [shape.add(a, b) for a, b in combinations(units, 2)]
    return [transvection_matrix(shape, h) for h in directions]


def apply_map(shape: AlgebraShape, matrix: np.ndarray,
              vectors: Sequence[ExponentVector]) -> List[ExponentVector]:
    """Images of vectors under a linear map given as a matrix on row vectors."""
    images = (vector_matrix(shape, vectors) @ matrix) % shape.degree
    return [ExponentVector(tuple(int(e) for e in row)) for row in images]


def preserves_phase(shape: AlgebraShape, matrix: np.ndarray) -> bool:
    """True iff M J M^T = J mod d."""
    j = shape.symplectic_form
    return not ((matrix @ j @ matrix.T - j) % shape.degree).any()


def _candidate_permutations(shape: AlgebraShape) -> List[np.ndarray]:
    """Each generator as a permutation of candidate positions (packed index - 1)."""
    d, length = shape.degree, shape.length
    weights = d ** np.arange(length, dtype=np.int64)
    packed = np.arange(1, shape.group_order, dtype=np.int64)
    vectors = (packed[:, None] // weights) % d
    perms = []
    for matrix in symplectic_generators(shape):
        images = ((vectors @ matrix) % d) @ weights
        perms.append(images - 1)
    return perms


def _components(state_count: int, edges: Sequence[Tuple[np.ndarray, np.ndarray]]) -> np.ndarray:
    rows = np.concatenate([src for src, _ in edges])
    cols = np.concatenate([dst for _, dst in edges])
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                       shape=(state_count, state_count)).tocsr()
    _, labels = connected_components(graph, directed=True, connection="weak")
    return labels


class OrbitStructure:
    """
    Orbits on candidates and on ordered candidate pairs.

    Pair orbits give the orbits of the stabilizer of a vector r: y and y'
    are in one Stab(r)-orbit iff (r, y) and (r, y') are in one pair orbit.
    """

    def __init__(self, shape: AlgebraShape, state_cap: int = CapacityLimits.ORBIT_STATE_CAP):
        self._shape = shape
        self._count = shape.group_order - 1
        self._state_cap = state_cap
        self._perms: Optional[List[np.ndarray]] = None
        self._vector_labels: Optional[np.ndarray] = None
        self._pair_labels: Optional[np.ndarray] = None
        self._pair_failed = False

    @property
    def shape(self) -> AlgebraShape:
        return self._shape

    def _generator_perms(self) -> List[np.ndarray]:
        if self._perms is None:
            self._perms = _candidate_permutations(self._shape)
        return self._perms

    def vector_labels(self) -> Optional[np.ndarray]:
        """Orbit label per candidate position, or None above the state cap."""
        if self._vector_labels is None:
            if self._count > self._state_cap:
                logger.warning(f"{self._count} vectors exceed the orbit state cap "
                               f"{self._state_cap}; symmetry reduction disabled")
                return None
            states = np.arange(self._count, dtype=np.int64)
            self._vector_labels = _components(
                self._count, [(states, perm) for perm in self._generator_perms()])
        return self._vector_labels

    def pair_labels(self) -> Optional[np.ndarray]:
        """(N, N) orbit labels of ordered pairs, or None above the state cap."""
        if self._pair_labels is None and not self._pair_failed:
            states_total = self._count * self._count
            if states_total > self._state_cap:
                logger.warning(f"{states_total} vector pairs exceed the orbit state cap "
                               f"{self._state_cap}; second-level symmetry disabled")
                self._pair_failed = True
                return None
            states = np.arange(states_total, dtype=np.int64)
            first, second = np.divmod(states, self._count)
            edges = [(states, perm[first] * self._count + perm[second])
                     for perm in self._generator_perms()]
            self._pair_labels = _components(states_total, edges).reshape(self._count, self._count)
        return self._pair_labels

    def representatives(self) -> Optional[List[int]]:
        """Smallest candidate position of every vector orbit, ascending."""
        labels = self.vector_labels()
        if labels is None:
            return None
        first: Dict[int, int] = {}
        for position, label in enumerate(labels.tolist()):
            first.setdefault(label, position)
        return sorted(first.values())

    def orbit_mask(self, position: int) -> int:
        """Bitmask of the vector orbit containing ``position``."""
        labels = self.vector_labels()
        return positions_to_mask(np.flatnonzero(labels == labels[position]))

    def stabilizer_classes(self, root: int, positions: Sequence[int]) -> Optional[List[Tuple[int, int]]]:
        """
        Partition ``positions`` into Stab(root)-orbits.

        Returns:
            list of (representative, mask) in ascending representative order,
            or None when pair orbits are unavailable
        """
        labels = self.pair_labels()
        if labels is None:
            return None
        row = labels[root]
        classes: Dict[int, List[int]] = {}
        for y in positions:
            classes.setdefault(int(row[y]), []).append(y)
        result = [(min(members), positions_to_mask(members)) for members in classes.values()]
        return sorted(result)


def symmetry_representatives(shape: AlgebraShape,
                             state_cap: int = CapacityLimits.ORBIT_STATE_CAP
                             ) -> Optional[Tuple[ExponentVector, ...]]:
    """
    One representative per symplectic orbit of nonzero vectors.

    Args:
        shape: Algebra shape
        state_cap: Largest number of vectors to close over

    Returns:
        Representatives (smallest packed index per orbit), or None with a
        warning when the orbit computation exceeds the cap
    """
    positions = OrbitStructure(shape, state_cap).representatives()
    if positions is None:
        return None
    return tuple(shape.from_index(p + 1) for p in positions)
