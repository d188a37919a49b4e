"""
Graph Checks - Structural lemmas on degree-4 Kummer graphs as executable checks.

Each checker returns a CheckResult whose witness names the obstructing
vertices. Checkers work on any antisymmetric phase matrix, realizable or not,
so the excluded configurations can be fed in directly.
"""

from itertools import combinations, permutations, product
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.application.dtos.kummer_dtos import CheckResult, TopologicalOrder
from src.common.constants.graph_constants import GraphDegree, LemmaNames
from src.common.exceptions.exceptions import (
    InvalidBlockError,
    InvalidInputError,
    UnsupportedDegreeError,
)
from src.common.utils.logger import get_logger
from src.domain.models.algebra import AlgebraShape, ExponentVector, phase_matrix
from src.domain.models.kummer_graph import BlockType, KummerGraph

logger = get_logger(__name__)

Config = Tuple[Tuple[int, ...], ...]


def _config(arrows: Iterable[Tuple[int, int]], dashed: Iterable[Tuple[int, int]]) -> Config:
    m = [[0] * 4 for _ in range(4)]
    for a, b in arrows:
        m[a][b], m[b][a] = 1, 3
    for a, b in dashed:
        m[a][b] = m[b][a] = 2
    return tuple(tuple(row) for row in m)


# Vertex order (v, w, z, t)
FORBIDDEN_CONFIG_A = _config(arrows=[(0, 1), (2, 0), (1, 3), (2, 3)], dashed=[(0, 3), (1, 2)])
FORBIDDEN_CONFIG_B = _config(arrows=[(0, 1), (1, 3), (0, 2), (2, 3), (1, 2)], dashed=[(0, 3)])

# Vertex order (v_1, v_2, v_3, v_4)
CYCLE_ALL_ARROWS_CONFIG = _config(arrows=[(0, 1), (2, 0), (1, 3), (3, 2)], dashed=[(0, 3), (1, 2)])
BLOCK_II_CONFIG = _config(arrows=[(0, 1), (0, 2), (1, 3), (2, 3)], dashed=[(0, 3), (1, 2)])

_BLOCK_TABLE = {
    (1, 1, 1): BlockType.TYPE_I,
    (1, 3, 3): BlockType.TYPE_II,
    (3, 1, 3): BlockType.TYPE_III,
    (3, 3, 1): BlockType.TYPE_IV,
}


def build_graph(shape: AlgebraShape, basis: Sequence[ExponentVector]) -> KummerGraph:
    """
    Labeled graph of a monomial set; the set need not be Kummer.

    Args:
        shape: Degree-4 shape
        basis: Distinct nonzero monomials, in vertex order

    Returns:
        KummerGraph

    Raises:
        UnsupportedDegreeError: If d != 4
        InvalidInputError: On zero or repeated vectors
    """
    if shape.degree != GraphDegree.SUPPORTED:
        raise UnsupportedDegreeError(GraphDegree.UNSUPPORTED_MESSAGE)
    vertices = tuple(shape.check(v) for v in basis)
    if any(v.is_zero() for v in vertices):
        raise InvalidInputError("scalar monomial is not a graph vertex")
    if len(set(vertices)) != len(vertices):
        raise InvalidInputError("duplicate monomials in graph")
    return KummerGraph(phases=phase_matrix(shape, vertices),
                       names=tuple(v.name for v in vertices),
                       vertices=vertices)


def graph_from_phases(phases: Sequence[Sequence[int]],
                      names: Optional[Sequence[str]] = None) -> KummerGraph:
    """
    Synthetic graph from an antisymmetric phase matrix mod 4.

    Raises:
        InvalidInputError: If the matrix is not square, or not antisymmetric
    """
    try:
        matrix = np.array(phases, dtype=np.int64) if len(phases) else np.zeros((0, 0), dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"phase matrix is not rectangular: {e}") from e
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidInputError(f"phase matrix must be square, got {matrix.shape}")
    matrix = matrix % 4
    if ((matrix + matrix.T) % 4).any() or np.diagonal(matrix).any():
        raise InvalidInputError("phase matrix must be antisymmetric mod 4")
    labels = tuple(names) if names is not None else tuple(f"v{i + 1}" for i in range(len(matrix)))
    if len(labels) != len(matrix):
        raise InvalidInputError("one name per vertex required")
    return KummerGraph(phases=matrix, names=labels)


def check_no_commuting(graph: KummerGraph) -> CheckResult:
    """Distinct basis monomials never commute."""
    for i, j in combinations(range(graph.size), 2):
        if graph.phase(i, j) == 0:
            return CheckResult(LemmaNames.NO_COMMUTING, (i, j),
                               f"{graph.names[i]} and {graph.names[j]} commute")
    return CheckResult(LemmaNames.NO_COMMUTING)


def check_anticommute_matching(graph: KummerGraph) -> CheckResult:
    """Each vertex has at most one dashed partner."""
    for v in range(graph.size):
        partners = [u for u in range(graph.size) if u != v and graph.is_dashed(v, u)]
        if len(partners) >= 2:
            return CheckResult(LemmaNames.ANTICOMMUTE_MATCHING, (v, partners[0], partners[1]),
                               f"{graph.names[v]} anti-commutes with {len(partners)} vertices")
    return CheckResult(LemmaNames.ANTICOMMUTE_MATCHING)


def check_no_directed_triangle(graph: KummerGraph) -> CheckResult:
    """No three vertices form a directed 3-cycle of arrows."""
    for i, j, k in combinations(range(graph.size), 3):
        for a, b, c in ((i, j, k), (i, k, j)):
            if graph.is_arrow(a, b) and graph.is_arrow(b, c) and graph.is_arrow(c, a):
                return CheckResult(LemmaNames.NO_DIRECTED_TRIANGLE, (a, b, c), "directed triangle")
    return CheckResult(LemmaNames.NO_DIRECTED_TRIANGLE)


def directed_cycles_ok(graph: KummerGraph) -> CheckResult:
    """Every simple arrow cycle has length 4 with both diagonals dashed."""
    for cycle in nx.simple_cycles(graph.arrow_digraph()):
        if len(cycle) != 4:
            return CheckResult(LemmaNames.DIRECTED_CYCLES, tuple(cycle),
                               f"directed cycle of length {len(cycle)}")
        a, b, c, d = cycle
        if not (graph.is_dashed(a, c) and graph.is_dashed(b, d)):
            return CheckResult(LemmaNames.DIRECTED_CYCLES, tuple(cycle),
                               "4-cycle with a diagonal that is not dashed")
    return CheckResult(LemmaNames.DIRECTED_CYCLES)


def _matches(graph: KummerGraph, order: Sequence[int], config: Config) -> bool:
    for a in range(4):
        row = config[a]
        for b in range(4):
            if a != b and graph.phase(order[a], order[b]) != row[b]:
                return False
    return True


def _find_config(graph: KummerGraph, configs: Sequence[Tuple[str, Config]]):
    for quad in combinations(range(graph.size), 4):
        for order in permutations(quad):
            for name, config in configs:
                if _matches(graph, order, config):
                    yield name, order


def check_forbidden_quads(graph: KummerGraph) -> CheckResult:
    """No 4-subset realizes either excluded four-element configuration."""
    configs = (("configuration (a)", FORBIDDEN_CONFIG_A), ("configuration (b)", FORBIDDEN_CONFIG_B))
    for name, order in _find_config(graph, configs):
        return CheckResult(LemmaNames.FORBIDDEN_QUADS, tuple(order), name)
    return CheckResult(LemmaNames.FORBIDDEN_QUADS)


def check_universal_orientation(graph: KummerGraph) -> CheckResult:
    """
    Around an all-arrow 4-cycle or a type II block, every other vertex
    points to all four members or receives from all four.
    """
    configs = (("all-arrow 4-cycle", CYCLE_ALL_ARROWS_CONFIG), ("type II block", BLOCK_II_CONFIG))
    for name, order in _find_config(graph, configs):
        for x in range(graph.size):
            if x in order:
                continue
            phases = {graph.phase(x, q) for q in order}
            if phases not in ({1}, {3}):
                return CheckResult(LemmaNames.UNIVERSAL_ORIENTATION, tuple(order) + (x,),
                                   f"{graph.names[x]} has mixed orientation towards a {name}")
    return CheckResult(LemmaNames.UNIVERSAL_ORIENTATION)


def check_edge_trichotomy(graph: KummerGraph) -> CheckResult:
    """
    Every pair is an arrow, or dashed with v^2 w^2 scalar (e_u = e_v mod 2).

    Raises:
        InvalidInputError: On a synthetic graph without vectors
    """
    if graph.vertices is None:
        raise InvalidInputError("edge trichotomy needs vector-backed graphs")
    for i, j in combinations(range(graph.size), 2):
        t = graph.phase(i, j)
        if t in (1, 3):
            continue
        if t == 2 and all((a + b) % 2 == 0
                          for a, b in zip(graph.vertices[i].entries, graph.vertices[j].entries)):
            continue
        return CheckResult(LemmaNames.EDGE_TRICHOTOMY, (i, j),
                           "commuting pair" if t == 0 else "dashed pair with v^2 w^2 not scalar")
    return CheckResult(LemmaNames.EDGE_TRICHOTOMY)


def classify_block(phases: Sequence[Sequence[int]]) -> BlockType:
    """
    Type of a block (v_k, v_k', v_{k+1}, v_{k+1}').

    Args:
        phases: 4 x 4 phase matrix in that vertex order

    Returns:
        BlockType read from the orientations of (v_k, v_{k+1}'),
        (v_k', v_{k+1}), (v_k', v_{k+1}')

    Raises:
        InvalidBlockError: Unless both pairs are dashed, v_k -> v_{k+1} and
            the other three cross pairs are arrows
    """
    p = np.array(phases, dtype=np.int64) % 4
    if p.shape != (4, 4):
        raise InvalidBlockError(f"block needs a 4x4 phase matrix, got shape {p.shape}")
    if p[0, 1] != 2 or p[2, 3] != 2:
        raise InvalidBlockError("block pairs (v_k, v_k') and (v_{k+1}, v_{k+1}') must be dashed")
    if p[0, 2] != 1:
        raise InvalidBlockError(f"chain arrow v_k -> v_(k+1) missing (phase {p[0, 2]})")
    key = (int(p[0, 3]), int(p[1, 2]), int(p[1, 3]))
    if any(t not in (1, 3) for t in key):
        raise InvalidBlockError(f"cross pairs must be arrows, got phases {key}")
    return _BLOCK_TABLE.get(key, BlockType.FORBIDDEN)


def a_priori_block_configurations() -> List[Config]:
    """The 8 phase matrices that satisfy the classify_block precondition."""
    configs = []
    for t03, t12, t13 in product((1, 3), repeat=3):
        m = [[0] * 4 for _ in range(4)]
        for (a, b), t in (((0, 1), 2), ((2, 3), 2), ((0, 2), 1),
                          ((0, 3), t03), ((1, 2), t12), ((1, 3), t13)):
            m[a][b], m[b][a] = t, (-t) % 4
        configs.append(tuple(tuple(row) for row in m))
    return configs


def topological_arrow_order(graph: KummerGraph, subset: Sequence[int]) -> TopologicalOrder:
    """
    Order an arrow tournament so that every arrow points forward.

    Args:
        graph: Kummer graph
        subset: Vertex indices, pairwise joined by arrows

    Returns:
        TopologicalOrder with the ordering, or the cycle obstructing it

    Raises:
        InvalidInputError: If two vertices of the subset are not joined by an arrow
    """
    nodes = list(dict.fromkeys(subset))
    for i, j in combinations(nodes, 2):
        if graph.phase(i, j) not in (1, 3):
            raise InvalidInputError(
                f"{graph.names[i]} and {graph.names[j]} are not joined by an arrow")
    digraph = graph.arrow_digraph(nodes)
    try:
        return TopologicalOrder(order=tuple(nx.lexicographical_topological_sort(digraph)))
    except nx.NetworkXUnfeasible:
        cycle = nx.find_cycle(digraph)
        return TopologicalOrder(cycle=tuple(u for u, _ in cycle))


def arrow_core(graph: KummerGraph) -> Tuple[int, ...]:
    """Vertex indices left after dropping the later member of each dashed pair."""
    dropped = {j for i, j in combinations(range(graph.size), 2) if graph.is_dashed(i, j)}
    return tuple(i for i in range(graph.size) if i not in dropped)


def check_arrow_path(graph: KummerGraph) -> CheckResult:
    """The arrow core of a Kummer graph is a transitive tournament."""
    core = arrow_core(graph)
    for i, j in combinations(core, 2):
        if graph.phase(i, j) not in (1, 3):
            return CheckResult(LemmaNames.ARROW_PATH, (i, j), "arrow core pair is not an arrow")
    result = topological_arrow_order(graph, core)
    if not result.ok:
        return CheckResult(LemmaNames.ARROW_PATH, result.cycle, "arrow core contains a cycle")
    return CheckResult(LemmaNames.ARROW_PATH)


CORE_CHECKERS = (
    check_no_commuting,
    check_anticommute_matching,
    check_no_directed_triangle,
    directed_cycles_ok,
    check_forbidden_quads,
    check_universal_orientation,
)


def run_core_checks(graph: KummerGraph) -> List[CheckResult]:
    """All six structural checks, in LemmaNames.CORE order."""
    return [checker(graph) for checker in CORE_CHECKERS]
