"""
Algebra Model - Exponent-vector representation of monomials.

A monomial prod x_k^{a_k} y_k^{b_k} of a tensor product of n symbol algebras
of degree d is tracked up to scalar by its exponent vector
(a_1, b_1, ..., a_n, b_n) in (Z/d)^{2n}. Multiplying monomials adds vectors;
the commutation factor of two monomials is rho^phase.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from src.common.constants.search_constants import CapacityLimits
from src.common.exceptions.exceptions import CapacityError, InvalidInputError, ShapeError


@dataclass(frozen=True, order=True)
class ExponentVector:
    """
    A monomial up to scalar: 2n residues in the order a_1, b_1, ..., a_n, b_n.

    Instances are created through ``AlgebraShape.vector`` which validates
    entries against the shape.
    """
    entries: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    @property
    def name(self) -> str:
        """Deterministic identifier, e.g. ``m_1_0_3_2``."""
        return "m_" + "_".join(str(e) for e in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class AlgebraShape:
    """
    Degree d and number n of symbol-algebra factors.

    Attributes:
        degree: d >= 2
        factors: n >= 1
    """
    degree: int
    factors: int

    def __post_init__(self):
        if not isinstance(self.degree, int) or isinstance(self.degree, bool) or self.degree < 2:
            raise ShapeError(f"degree must be an integer >= 2, got {self.degree!r}")
        if not isinstance(self.factors, int) or isinstance(self.factors, bool) or self.factors < 1:
            raise ShapeError(f"factors must be an integer >= 1, got {self.factors!r}")

    @property
    def d(self) -> int:
        return self.degree

    @property
    def n(self) -> int:
        return self.factors

    @property
    def length(self) -> int:
        """Number of entries of an exponent vector (2n)."""
        return 2 * self.factors

    @property
    def group_order(self) -> int:
        """|(Z/d)^{2n}|."""
        return self.degree ** self.length

    @property
    def label(self) -> str:
        return f"d={self.degree} n={self.factors}"

    @cached_property
    def symplectic_form(self) -> np.ndarray:
        """Matrix J with phase(u, v) = u J v^T mod d."""
        j = np.zeros((self.length, self.length), dtype=np.int64)
        for k in range(self.factors):
            j[2 * k, 2 * k + 1] = 1
            j[2 * k + 1, 2 * k] = -1
        return j

    def vector(self, entries: Iterable[int], reduce: bool = False) -> ExponentVector:
        """
        Build an exponent vector for this shape.

        Args:
            entries: 2n integers
            reduce: Reduce entries mod d instead of rejecting out-of-range values

        Returns:
            ExponentVector

        Raises:
            ShapeError: If the length is not 2n
            InvalidInputError: If an entry is outside [0, d) and reduce is False
        """
        values = tuple(int(e) for e in entries)
        if len(values) != self.length:
            raise ShapeError(
                f"exponent vector {values} has length {len(values)}, expected {self.length} for {self.label}")
        if reduce:
            values = tuple(e % self.degree for e in values)
        elif any(e < 0 or e >= self.degree for e in values):
            raise InvalidInputError(f"entries of {values} must lie in [0, {self.degree})")
        return ExponentVector(values)

    def check(self, v: ExponentVector) -> ExponentVector:
        """Raise ShapeError unless v has length 2n."""
        if len(v.entries) != self.length:
            raise ShapeError(
                f"exponent vector {v} has length {len(v.entries)}, expected {self.length} for {self.label}")
        return v

    def zero(self) -> ExponentVector:
        return ExponentVector((0,) * self.length)

    def unit(self, position: int) -> ExponentVector:
        """The vector of the generator at ``position`` (0-based: x_1, y_1, x_2, ...)."""
        entries = [0] * self.length
        entries[position] = 1
        return ExponentVector(tuple(entries))

    def index_of(self, v: ExponentVector) -> int:
        """Packed little-end index sum_i entries[i] * d^i; the canonical order."""
        self.check(v)
        index = 0
        for e in reversed(v.entries):
            index = index * self.degree + e
        return index

    def from_index(self, index: int) -> ExponentVector:
        entries = []
        for _ in range(self.length):
            index, e = divmod(index, self.degree)
            entries.append(e)
        return ExponentVector(tuple(entries))

    def add(self, u: ExponentVector, v: ExponentVector) -> ExponentVector:
        self.check(u)
        self.check(v)
        return ExponentVector(tuple((a + b) % self.degree for a, b in zip(u.entries, v.entries)))

    def scale(self, v: ExponentVector, k: int) -> ExponentVector:
        self.check(v)
        return ExponentVector(tuple((k * a) % self.degree for a in v.entries))

    def combine(self, terms: Iterable[Tuple[int, ExponentVector]]) -> ExponentVector:
        """Signed sum sum_j c_j v_j mod d (products of monomial powers)."""
        total = [0] * self.length
        for coefficient, v in terms:
            self.check(v)
            for i, a in enumerate(v.entries):
                total[i] += coefficient * a
        return ExponentVector(tuple(t % self.degree for t in total))


def symplectic_phase(shape: AlgebraShape, u: ExponentVector, v: ExponentVector) -> int:
    """
    Commutation phase t with uv = rho^t vu.

    Args:
        shape: Algebra shape
        u: First monomial
        v: Second monomial

    Returns:
        int: sum_k (a_k b'_k - b_k a'_k) mod d

    Raises:
        ShapeError: On length mismatch
    """
    shape.check(u)
    shape.check(v)
    a, b = u.entries, v.entries
    total = 0
    for k in range(0, shape.length, 2):
        total += a[k] * b[k + 1] - a[k + 1] * b[k]
    return total % shape.degree


def product_exponent(shape: AlgebraShape,
                     items: Sequence[Tuple[ExponentVector, int]]) -> ExponentVector:
    """
    Exponent vector of v_1^{d_1} ... v_m^{d_m}.

    Args:
        shape: Algebra shape
        items: (vector, multiplicity) pairs with multiplicity >= 0

    Returns:
        ExponentVector: sum d_j e_j mod d; zero iff the product is a scalar

    Raises:
        ShapeError: On length mismatch
        InvalidInputError: On a negative multiplicity
    """
    for _, multiplicity in items:
        if multiplicity < 0:
            raise InvalidInputError(f"multiplicities must be >= 0, got {multiplicity}")
    return shape.combine((m, v) for v, m in items)


def all_nonzero_vectors(shape: AlgebraShape) -> List[ExponentVector]:
    """All d^{2n} - 1 nonzero vectors in canonical (packed-index) order."""
    return [shape.from_index(i) for i in range(1, shape.group_order)]


def vector_matrix(shape: AlgebraShape, vectors: Sequence[ExponentVector]) -> np.ndarray:
    """Stack vectors into a (len, 2n) int64 array."""
    if not vectors:
        return np.zeros((0, shape.length), dtype=np.int64)
    return np.array([shape.check(v).entries for v in vectors], dtype=np.int64)


def phase_matrix(shape: AlgebraShape, vectors: Sequence[ExponentVector]) -> np.ndarray:
    """
    All pairwise phases at once.

    Returns:
        np.ndarray: P with P[i, j] = symplectic_phase(v_i, v_j)
    """
    m = vector_matrix(shape, vectors)
    return (m @ shape.symplectic_form @ m.T) % shape.degree


def subgroup_generated(shape: AlgebraShape,
                       vectors: Iterable[ExponentVector]) -> FrozenSet[int]:
    """
    The subgroup of (Z/d)^{2n} generated by ``vectors``, as packed indices.

    Raises:
        CapacityError: If the ambient group is too large to close over
    """
    if shape.group_order > CapacityLimits.SUBGROUP_MAX_ORDER:
        raise CapacityError(f"subgroup closure refused for {shape.label}")
    generators = [shape.check(v) for v in vectors]
    elements = {shape.zero()}
    frontier = [shape.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = shape.add(x, g)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(shape.index_of(x) for x in elements)


