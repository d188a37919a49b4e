"""
Construction Service - The dn+1 standard basis and subalgebra decompositions.

Products such as v_1 v_2^{-1} v_3 are written additively as e_1 - e_2 + e_3
(scalars dropped). The decompositions check their own output phases and
raise CertificateError if a formula ever produces a wrong matrix.
"""

from typing import List, Optional, Sequence, Tuple

from src.common.constants.graph_constants import GraphDegree
from src.common.exceptions.exceptions import (
    CertificateError,
    InvalidChainError,
    InvalidHypothesisError,
    UnsupportedDegreeError,
)
from src.common.utils.logger import get_logger
from src.domain.models.algebra import AlgebraShape, ExponentVector, symplectic_phase

logger = get_logger(__name__)

GeneratorPair = Tuple[ExponentVector, ExponentVector]


def standard_basis(shape: AlgebraShape) -> Tuple[ExponentVector, ...]:
    """
    Monomial basis of V_n, where V_0 = F and V_k = F[x_k] y_k + V_{k-1} x_k.

    Args:
        shape: Algebra shape

    Returns:
        tuple: d*n + 1 monomials; the x_k^j y_k terms of each step come first
    """
    d = shape.degree
    current: List[ExponentVector] = [shape.zero()]
    for k in range(shape.factors):
        x_k, y_k = shape.unit(2 * k), shape.unit(2 * k + 1)
        layer = [shape.combine([(j, x_k), (1, y_k)]) for j in range(d)]
        layer += [shape.add(b, x_k) for b in current]
        current = layer
    logger.debug(f"standard basis for {shape.label}: {len(current)} monomials")
    return tuple(current)


def _certify(shape: AlgebraShape, pairs: Sequence[GeneratorPair],
             last_phase: Optional[int] = None) -> None:
    for j, (p, q) in enumerate(pairs):
        expected = last_phase if (last_phase is not None and j == len(pairs) - 1) else 1
        got = symplectic_phase(shape, p, q)
        if got != expected:
            raise CertificateError(f"pair {j + 1}: phase {got}, expected {expected}")
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            for a in pairs[i]:
                for b in pairs[j]:
                    if symplectic_phase(shape, a, b) != 0:
                        raise CertificateError(
                            f"pairs {i + 1} and {j + 1} do not commute ({a}, {b})")


def _check_arrow_chain(shape: AlgebraShape, chain: Sequence[ExponentVector], error) -> None:
    for k in range(len(chain)):
        for j in range(k + 1, len(chain)):
            t = symplectic_phase(shape, chain[k], chain[j])
            if t != 1:
                raise error(f"phase(v_{k + 1}, v_{j + 1}) = {t}, expected 1")


def decompose_even_chain(shape: AlgebraShape,
                         chain: Sequence[ExponentVector]) -> List[GeneratorPair]:
    """
    Split an arrow chain v_1 -> ... -> v_{2m} into commuting generator pairs.

    Pair j is (P_j + e_{2j-1}, P_j + e_{2j}) with
    P_j = sum_{k<j} (e_{2k-1} - e_{2k}).

    Args:
        shape: Algebra shape
        chain: v_1, ..., v_{2m} with phase(v_k, v_j) = 1 for k < j

    Returns:
        list of (p_j, q_j): phase 1 within a pair, 0 across pairs

    Raises:
        InvalidChainError: If the chain is empty, odd or not an arrow chain
    """
    chain = [shape.check(v) for v in chain]
    if not chain or len(chain) % 2:
        raise InvalidChainError(f"even chain expected, got length {len(chain)}")
    _check_arrow_chain(shape, chain, InvalidChainError)

    pairs: List[GeneratorPair] = []
    prefix: List[Tuple[int, ExponentVector]] = []
    for j in range(len(chain) // 2):
        odd, even = chain[2 * j], chain[2 * j + 1]
        pairs.append((shape.combine(prefix + [(1, odd)]),
                      shape.combine(prefix + [(1, even)])))
        prefix += [(1, odd), (-1, even)]
    _certify(shape, pairs)
    return pairs


def decompose_chain_with_partner(shape: AlgebraShape, chain: Sequence[ExponentVector],
                                 w: ExponentVector, r: int) -> List[GeneratorPair]:
    """
    Generators of the quaternion-containing decomposition of a chain with a dashed partner.

    Hypothesis: v_1 -> ... -> v_{2m+1} is an arrow chain, v_k -> w for k < r,
    v_r -- w and w -> v_k for k > r, with r odd. With l = (r-1)/2 the pairs are
      j <= l:        (A_j + e_{2j-1}, A_j + e_{2j}),  A_j = sum_{k<j} (e_{2k-1} - e_{2k})
      l < j <= m:    (B_j + e_{2j}, B_j + e_{2j+1}),  B_j = A_{l+1} + sum_{l<k<j} (e_{2k} - e_{2k+1})
      j = m+1:       (C + e_r, C + e_w),              C = A_{l+1} + sum_{l<k<=m} (e_{2k+1} - e_{2k})

    Args:
        shape: Degree-4 algebra shape
        chain: v_1, ..., v_{2m+1}
        w: The dashed partner of v_r
        r: 1-based odd position of the partner in the chain

    Returns:
        list of m+1 pairs; phase 1 within the first m, phase 2 within the
        last, 0 across pairs

    Raises:
        UnsupportedDegreeError: If d != 4
        InvalidHypothesisError: Naming the first phase that breaks the hypothesis
    """
    if shape.degree != GraphDegree.SUPPORTED:
        raise UnsupportedDegreeError(f"chain decomposition with a dashed partner needs d=4, got d={shape.degree}")
    chain = [shape.check(v) for v in chain]
    shape.check(w)
    if len(chain) % 2 == 0:
        raise InvalidHypothesisError(f"odd chain expected, got length {len(chain)}")
    if r % 2 == 0 or not 1 <= r <= len(chain):
        raise InvalidHypothesisError(f"r must be odd in [1, {len(chain)}], got {r}")
    _check_arrow_chain(shape, chain, InvalidHypothesisError)
    for k, v in enumerate(chain, start=1):
        t = symplectic_phase(shape, v, w)
        expected = 1 if k < r else (2 if k == r else 3)
        if t != expected:
            raise InvalidHypothesisError(f"phase(v_{k}, w) = {t}, expected {expected}")

    def e(k: int) -> ExponentVector:
        return chain[k - 1]

    m = (len(chain) - 1) // 2
    ell = (r - 1) // 2
    pairs: List[GeneratorPair] = []

    a_terms: List[Tuple[int, ExponentVector]] = []
    for j in range(1, ell + 1):
        pairs.append((shape.combine(a_terms + [(1, e(2 * j - 1))]),
                      shape.combine(a_terms + [(1, e(2 * j))])))
        a_terms += [(1, e(2 * j - 1)), (-1, e(2 * j))]

    b_terms = list(a_terms)
    for j in range(ell + 1, m + 1):
        pairs.append((shape.combine(b_terms + [(1, e(2 * j))]),
                      shape.combine(b_terms + [(1, e(2 * j + 1))])))
        b_terms += [(1, e(2 * j)), (-1, e(2 * j + 1))]

    c_terms = list(a_terms)
    for k in range(ell + 1, m + 1):
        c_terms += [(1, e(2 * k + 1)), (-1, e(2 * k))]
    pairs.append((shape.combine(c_terms + [(1, e(r))]),
                  shape.combine(c_terms + [(1, w)])))

    _certify(shape, pairs, last_phase=2)
    return pairs
