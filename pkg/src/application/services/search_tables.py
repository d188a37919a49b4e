"""
Search Tables - Bitset compatibility data for the maximum Kummer-set search.

Candidates are all nonzero vectors; candidate position p holds the vector
with packed index p + 1. Sets of positions are Python ints used as bitsets.

For a sorted tuple T of positions, ``hyper_mask(T)`` is the set of z such
that every multiset on T + {z} using all of them passes the Kummer test.
A member set S stays Kummer when z is added iff z lies in hyper_mask(T) for
every nonempty T of S with |T| <= d - 1.
"""

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.application.services.kummer_criterion import coefficient_from_phases, compositions
from src.common.utils.bitsets import bools_to_mask
from src.common.utils.logger import get_logger
from src.domain.models.algebra import AlgebraShape, all_nonzero_vectors, vector_matrix

logger = get_logger(__name__)


class SearchTables:
    """Candidate vectors, phases and memoized extension bitsets for one shape."""

    def __init__(self, shape: AlgebraShape):
        self.shape = shape
        self.degree = shape.degree
        self.candidates = all_nonzero_vectors(shape)
        self.count = len(self.candidates)
        self.vectors = vector_matrix(shape, self.candidates)
        self.phases = ((self.vectors @ shape.symplectic_form @ self.vectors.T)
                       % self.degree).astype(np.int8)
        self._powers = self.degree ** np.arange(self.degree, dtype=np.int64)
        self._hyper: Dict[Tuple[int, ...], int] = {}
        self._zero_tables: Dict[Tuple, np.ndarray] = {}
        self.pair = [self.hyper_mask((p,)) for p in range(self.count)]
        logger.debug(f"search tables for {shape.label}: {self.count} candidates")

    def _zero_table(self, internal: Tuple[Tuple[int, ...], ...],
                    composition: Tuple[int, ...]) -> np.ndarray:
        """
        zero[code] tells whether the coefficient vanishes when the new
        element has phases given by the base-d digits of ``code`` towards
        the members; the new element comes last in reference order.
        """
        key = (internal, composition)
        table = self._zero_tables.get(key)
        if table is not None:
            return table
        d = self.degree
        t = len(internal)
        table = np.zeros(d ** t, dtype=bool)
        for code in range(d ** t):
            digits = [(code // d ** i) % d for i in range(t)]
            rows = [list(internal[i]) + [digits[i]] for i in range(t)]
            rows.append([(-x) % d for x in digits] + [0])
            phases = tuple(tuple(row) for row in rows)
            table[code] = coefficient_from_phases(d, phases, composition).is_zero()
        self._zero_tables[key] = table
        return table

    def hyper_mask(self, members: Tuple[int, ...]) -> int:
        """
        Bitset of z such that members + {z} passes every multiset using all of them.

        Args:
            members: Sorted candidate positions, 1 <= len <= d - 1

        Returns:
            int: bitset over candidate positions; members themselves excluded
        """
        cached = self._hyper.get(members)
        if cached is not None:
            return cached
        d = self.degree
        idx = list(members)
        internal = tuple(tuple(int(self.phases[a, b]) for b in idx) for a in idx)
        codes = (self.phases[idx, :].astype(np.int64).T @ self._powers[:len(idx)])
        ok = np.ones(self.count, dtype=bool)
        for composition in compositions(d, len(idx) + 1):
            zero = self._zero_table(internal, composition)
            base = np.asarray(composition[:-1], dtype=np.int64) @ self.vectors[idx]
            scalar = ~(((base + composition[-1] * self.vectors) % d).any(axis=1))
            ok &= zero[codes] | scalar
        ok[idx] = False
        mask = bools_to_mask(ok)
        self._hyper[members] = mask
        return mask

    def extension_mask(self, members: Sequence[int], v: int) -> int:
        """
        Candidates z such that members + {v, z} is Kummer, given that
        members + {v} is Kummer and z is compatible with every member.
        """
        mask = self.pair[v]
        limit = min(self.degree - 2, len(members))
        for size in range(1, limit + 1):
            for chosen in combinations(members, size):
                mask &= self.hyper_mask(tuple(sorted(chosen + (v,))))
                if not mask:
                    return 0
        return mask

    def greedy_coloring(self, mask: int) -> List[Tuple[int, int]]:
        """
        Color the candidates of ``mask`` into classes of pairwise incompatible vectors.

        Each class can contribute at most one vector to a Kummer set, so a
        vertex's color number bounds the growth available from it and the
        vertices before it.

        Returns:
            (position, color) pairs by ascending color
        """
        order: List[Tuple[int, int]] = []
        remaining = mask
        color = 0
        while remaining:
            color += 1
            available = remaining
            while available:
                low = available & -available
                p = low.bit_length() - 1
                remaining ^= low
                available &= ~low & ~self.pair[p]
                order.append((p, color))
        return order
