"""
Shared fixtures and random-instance helpers for the test suites.

Helpers build vectors with prescribed phase patterns from a symplectic
basis and then move them by a random symplectic map, so the instances are
generic rather than aligned with coordinate axes.
"""

from typing import List, Sequence, Tuple

import numpy as np
import pytest

from src.application.services.symmetry import apply_map, transvection_matrix
from src.common.utils.logger import LoggerSetup
from src.domain.models.algebra import AlgebraShape, ExponentVector


@pytest.fixture(scope="session", autouse=True)
def _logging(tmp_path_factory):
    log_dir = tmp_path_factory.mktemp("logs")
    LoggerSetup.initialize(log_file=str(log_dir / "kummer_lab.log"),
                           log_level="DEBUG", console_output=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def d4n1():
    return AlgebraShape(4, 1)


@pytest.fixture
def d4n2():
    return AlgebraShape(4, 2)


def vec(shape: AlgebraShape, *entries: int) -> ExponentVector:
    return shape.vector(entries)


def random_vector(shape: AlgebraShape, rng, nonzero: bool = True) -> ExponentVector:
    while True:
        v = shape.vector(rng.integers(0, shape.degree, size=shape.length))
        if not (nonzero and v.is_zero()):
            return v


def random_symplectic_map(shape: AlgebraShape, rng, steps: int = 12) -> np.ndarray:
    """Product of transvections along random directions."""
    matrix = np.eye(shape.length, dtype=np.int64)
    for _ in range(steps):
        h = random_vector(shape, rng, nonzero=False)
        matrix = (matrix @ transvection_matrix(shape, h)) % shape.degree
    return matrix


def move(shape: AlgebraShape, matrix: np.ndarray,
         vectors: Sequence[ExponentVector]) -> List[ExponentVector]:
    return apply_map(shape, matrix, vectors)


def even_chain(shape: AlgebraShape, m: int, rng) -> List[ExponentVector]:
    """
    A random arrow chain v_1 -> ... -> v_{2m} (m <= n).

    With a symplectic basis (x_j, y_j): v_{2j-1} = x_j - P_j, v_{2j} = y_j - P_j
    where P_j = sum_{k<j} (x_k - y_k).
    """
    assert m <= shape.factors
    chain = []
    prefix: List[Tuple[int, ExponentVector]] = []
    for j in range(m):
        x, y = shape.unit(2 * j), shape.unit(2 * j + 1)
        chain.append(shape.combine([(1, x)] + [(-c, v) for c, v in prefix]))
        chain.append(shape.combine([(1, y)] + [(-c, v) for c, v in prefix]))
        prefix += [(1, x), (-1, y)]
    return move(shape, random_symplectic_map(shape, rng), chain)


def chain_with_partner(shape: AlgebraShape, m: int, r: int,
                       rng) -> Tuple[List[ExponentVector], ExponentVector]:
    """
    A random d=4 instance of the partner hypothesis: chain v_1..v_{2m+1},
    v_k -> w for k < r, v_r -- w, w -> v_k for k > r (m <= n - 1, r odd).
    """
    assert shape.degree == 4 and m <= shape.factors - 1 and r % 2 == 1
    ell = (r - 1) // 2
    mu = [shape.unit(2 * j) for j in range(m + 1)]
    eta = [shape.unit(2 * j + 1) for j in range(m)] + [shape.scale(shape.unit(2 * m + 1), 2)]

    def diff(k: int) -> List[Tuple[int, ExponentVector]]:
        return [(1, mu[k]), (-1, eta[k])]

    a_terms: List[Tuple[int, ExponentVector]] = []
    chain: List[ExponentVector] = []
    for j in range(ell):
        chain.append(shape.combine([(1, mu[j])] + [(-c, v) for c, v in a_terms]))
        chain.append(shape.combine([(1, eta[j])] + [(-c, v) for c, v in a_terms]))
        a_terms += diff(j)

    tail: List[ExponentVector] = []
    b_terms: List[Tuple[int, ExponentVector]] = []
    for j in range(ell, m):
        shift = [(-c, v) for c, v in a_terms + b_terms]
        tail.append(shape.combine([(1, mu[j])] + shift))
        tail.append(shape.combine([(1, eta[j])] + shift))
        b_terms += diff(j)

    c_terms = [(-c, v) for k in range(ell, m) for c, v in diff(k)]
    shift = [(-c, v) for c, v in a_terms + c_terms]
    v_r = shape.combine([(1, mu[m])] + shift)
    w = shape.combine([(1, eta[m])] + shift)

    vectors = chain + [v_r] + tail + [w]
    moved = move(shape, random_symplectic_map(shape, rng), vectors)
    return moved[:-1], moved[-1]
