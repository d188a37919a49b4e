"""
Kummer Criterion - Symmetric-product coefficients and the monomial Kummer test.

A set of monomials spans a Kummer space iff for every sub-multiset
v_1^{d_1} ... v_m^{d_m} with sum d_j = d, either the symmetric-product
coefficient c vanishes or the product is a scalar (zero exponent).
"""

from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from src.application.dtos.kummer_dtos import KummerViolation, MultisetSpec
from src.common.exceptions.exceptions import InvalidInputError
from src.common.utils.logger import get_logger
from src.domain.models.algebra import (
    AlgebraShape,
    ExponentVector,
    phase_matrix,
    product_exponent,
    symplectic_phase,
    vector_matrix,
)
from src.domain.models.cyclotomic import CyclotomicInteger

logger = get_logger(__name__)

PhaseKey = Tuple[Tuple[int, ...], ...]


def compositions(d: int, m: int) -> List[Tuple[int, ...]]:
    """
    All ways to write d as an ordered sum of m positive parts.

    Args:
        d: Total
        m: Number of parts

    Returns:
        List of tuples in lexicographic order; empty when m < 1 or m > d
    """
    if m < 1 or m > d:
        return []
    result = []
    for cuts in combinations(range(1, d), m - 1):
        bounds = (0,) + cuts + (d,)
        result.append(tuple(bounds[i + 1] - bounds[i] for i in range(m)))
    return result


@lru_cache(maxsize=None)
def coefficient_from_phases(d: int, phases: PhaseKey,
                            multiplicities: Tuple[int, ...]) -> CyclotomicInteger:
    """
    Symmetric-product coefficient from the phase matrix alone.

    Sums rho^phi(w) over the distinct arrangements w, where phi(w) adds
    phases[a][b] for every position pair holding letters a > b in that order.

    Args:
        d: Degree
        phases: m x m phase matrix in reference order
        multiplicities: Positive counts summing to d

    Returns:
        CyclotomicInteger
    """
    letters = [index for index, count in enumerate(multiplicities) for _ in range(count)]
    counts = [0] * d
    for word in multiset_permutations(letters):
        exponent = 0
        for p in range(len(word)):
            wp = word[p]
            row = phases[wp]
            for q in range(p + 1, len(word)):
                if wp > word[q]:
                    exponent += row[word[q]]
        counts[exponent % d] += 1
    return CyclotomicInteger.from_root_counts(d, counts)


def _phase_key(shape: AlgebraShape, elements: Sequence[ExponentVector]) -> PhaseKey:
    return tuple(tuple(symplectic_phase(shape, u, v) for v in elements) for u in elements)


def validate_spec(shape: AlgebraShape, spec: MultisetSpec) -> None:
    """
    Check a multiset spec against the shape.

    Raises:
        ShapeError: If an element has the wrong length
        InvalidInputError: On empty, non-positive, non-summing or repeated input
    """
    if not spec.elements:
        raise InvalidInputError("multiset spec needs at least one element")
    if len(spec.elements) != len(spec.multiplicities):
        raise InvalidInputError(
            f"{len(spec.elements)} elements but {len(spec.multiplicities)} multiplicities")
    for v in spec.elements:
        shape.check(v)
    if any(m < 1 for m in spec.multiplicities):
        raise InvalidInputError(f"multiplicities must be positive: {spec.multiplicities}")
    if sum(spec.multiplicities) != shape.degree:
        raise InvalidInputError(
            f"multiplicities {spec.multiplicities} sum to {sum(spec.multiplicities)}, expected {shape.degree}")
    if len(set(spec.elements)) != len(spec.elements):
        raise InvalidInputError("multiset elements must be pairwise distinct")


def symmetric_coefficient(shape: AlgebraShape, spec: MultisetSpec) -> CyclotomicInteger:
    """
    The c with v_1^{d_1} * ... * v_m^{d_m} = c v_1^{d_1} ... v_m^{d_m}.

    Args:
        shape: Algebra shape
        spec: Elements in reference order with their multiplicities

    Returns:
        CyclotomicInteger: c in Z[zeta_d]

    Raises:
        ShapeError, InvalidInputError: On an invalid spec
    """
    validate_spec(shape, spec)
    return coefficient_from_phases(shape.degree, _phase_key(shape, spec.elements),
                                   tuple(spec.multiplicities))


def multiset_condition_holds(shape: AlgebraShape, spec: MultisetSpec) -> bool:
    """True iff the coefficient vanishes or the product is a scalar."""
    if symmetric_coefficient(shape, spec).is_zero():
        return True
    return product_exponent(shape, spec.items).is_zero()


def _first_violation(shape: AlgebraShape, elements: Tuple[ExponentVector, ...],
                     phases: PhaseKey,
                     parts: Iterable[Tuple[int, ...]]) -> Optional[KummerViolation]:
    for composition in parts:
        c = coefficient_from_phases(shape.degree, phases, composition)
        if c.is_zero():
            continue
        exponent = product_exponent(shape, list(zip(elements, composition)))
        if not exponent.is_zero():
            return KummerViolation(elements, composition, c, exponent)
    return None


def _canonical_members(shape: AlgebraShape,
                       vectors: Iterable[ExponentVector]) -> List[ExponentVector]:
    members = [shape.check(v) for v in vectors]
    for v in members:
        if v.is_zero():
            raise InvalidInputError(f"scalar monomial {v} is not a basis element")
    if len(set(members)) != len(members):
        raise InvalidInputError("duplicate monomials in basis")
    return sorted(members, key=shape.index_of)


def _sub_phases(full: np.ndarray, indices: Sequence[int]) -> PhaseKey:
    return tuple(tuple(int(full[i, j]) for j in indices) for i in indices)


def is_kummer_set(shape: AlgebraShape,
                  basis: Iterable[ExponentVector]) -> Optional[KummerViolation]:
    """
    Test whether monomials span a Kummer space.

    Elements are put in canonical order first, so the reported violation is
    the first one by (subset size, subset, composition).

    Args:
        shape: Algebra shape
        basis: Distinct nonzero monomials

    Returns:
        None if the set is Kummer, otherwise the first KummerViolation

    Raises:
        InvalidInputError: On an empty basis, a zero vector or duplicates
        ShapeError: On length mismatch
    """
    members = _canonical_members(shape, basis)
    if not members:
        raise InvalidInputError("basis must be nonempty")
    full = phase_matrix(shape, members)
    for size in range(2, min(shape.degree, len(members)) + 1):
        parts = compositions(shape.degree, size)
        for indices in combinations(range(len(members)), size):
            subset = tuple(members[i] for i in indices)
            violation = _first_violation(shape, subset, _sub_phases(full, indices), parts)
            if violation is not None:
                logger.debug(f"Kummer violation on {[str(v) for v in subset]} "
                             f"with multiplicities {violation.multiplicities}")
                return violation
    return None


def extension_violation(shape: AlgebraShape, members: Sequence[ExponentVector],
                        z: ExponentVector) -> Optional[KummerViolation]:
    """
    Incremental test for members + {z}, given members is already Kummer.

    Only multisets containing z with positive multiplicity are examined.

    Returns:
        None if the extension stays Kummer, otherwise a violation
    """
    members = list(members)
    if z in members:
        raise InvalidInputError(f"{z} is already a member")
    if z.is_zero():
        raise InvalidInputError(f"scalar monomial {z} is not a basis element")
    ordered = sorted(members + [shape.check(z)], key=shape.index_of)
    z_at = ordered.index(z)
    others = [i for i in range(len(ordered)) if i != z_at]
    full = phase_matrix(shape, ordered)
    for size in range(1, min(shape.degree - 1, len(others)) + 1):
        parts = compositions(shape.degree, size + 1)
        for chosen in combinations(others, size):
            indices = tuple(sorted(chosen + (z_at,)))
            subset = tuple(ordered[i] for i in indices)
            violation = _first_violation(shape, subset, _sub_phases(full, indices), parts)
            if violation is not None:
                return violation
    return None


def pair_compatibility_table(shape: AlgebraShape,
                             candidates: Sequence[ExponentVector]) -> np.ndarray:
    """
    Pairwise Kummer compatibility.

    Args:
        shape: Algebra shape
        candidates: Distinct nonzero monomials

    Returns:
        np.ndarray: Symmetric boolean matrix; entry (i, j) tells whether
        {v_i, v_j} is Kummer, diagonal True
    """
    members = [shape.check(v) for v in candidates]
    if any(v.is_zero() for v in members):
        raise InvalidInputError("scalar monomial among candidates")
    if len(set(members)) != len(members):
        raise InvalidInputError("duplicate candidates")
    d = shape.degree
    count = len(members)
    phases = phase_matrix(shape, members)
    matrix = vector_matrix(shape, members)
    parts = compositions(d, 2)
    # Pairs are decided by their phase: which compositions have c != 0
    nonzero_parts = {
        t: [comp for comp in parts
            if not coefficient_from_phases(d, ((0, t), ((-t) % d, 0)), comp).is_zero()]
        for t in range(d)
    }
    table = np.ones((count, count), dtype=bool)
    for i in range(count):
        for j in range(i + 1, count):
            ok = True
            for d1, d2 in nonzero_parts[int(phases[i, j])]:
                if ((d1 * matrix[i] + d2 * matrix[j]) % d).any():
                    ok = False
                    break
            table[i, j] = table[j, i] = ok
    return table

