"""
Kummer Graph Model - Labeled digraph of a monomial set in degree 4.

Vertex i points to vertex j (ArrowTo) when v_i v_j = i v_j v_i, the pair is
Dashed when v_i v_j = -v_j v_i and Commute when they commute.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.domain.models.algebra import ExponentVector


class EdgeLabel(Enum):
    """Label of an ordered vertex pair, read off the phase."""
    COMMUTE = 0
    ARROW_TO = 1
    DASHED = 2
    ARROW_FROM = 3

    @classmethod
    def from_phase(cls, phase: int) -> 'EdgeLabel':
        return cls(int(phase) % 4)


class BlockType(Enum):
    """Admissible orientations of a dashed-pair block, plus the excluded ones."""
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"
    TYPE_IV = "IV"
    FORBIDDEN = "Forbidden"


@dataclass(frozen=True, eq=False)
class KummerGraph:
    """
    Degree-4 labeled graph.

    Attributes:
        phases: Antisymmetric (m, m) matrix of phases mod 4
        names: Vertex identifiers
        vertices: Backing exponent vectors, or None for synthetic graphs
    """
    phases: np.ndarray
    names: Tuple[str, ...]
    vertices: Optional[Tuple[ExponentVector, ...]] = None
    _digraph: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.names)

    def phase(self, i: int, j: int) -> int:
        return int(self.phases[i, j])

    def label(self, i: int, j: int) -> EdgeLabel:
        return EdgeLabel.from_phase(self.phases[i, j])

    def is_arrow(self, i: int, j: int) -> bool:
        """True iff i -> j."""
        return self.phase(i, j) == 1

    def is_dashed(self, i: int, j: int) -> bool:
        return self.phase(i, j) == 2

    def pairs_with(self, label: EdgeLabel) -> List[Tuple[int, int]]:
        """Unordered pairs i < j whose label(i, j) is ``label`` (or its reverse for arrows)."""
        wanted = {label}
        if label in (EdgeLabel.ARROW_TO, EdgeLabel.ARROW_FROM):
            wanted = {EdgeLabel.ARROW_TO, EdgeLabel.ARROW_FROM}
        return [(i, j) for i in range(self.size) for j in range(i + 1, self.size)
                if self.label(i, j) in wanted]

    def arrow_digraph(self, subset: Optional[Sequence[int]] = None) -> nx.DiGraph:
        """Arrow edges as a networkx DiGraph on vertex indices."""
        nodes = list(range(self.size)) if subset is None else list(subset)
        key = tuple(nodes)
        if key in self._digraph:
            return self._digraph[key]
        graph = nx.DiGraph()
        graph.add_nodes_from(nodes)
        for i in nodes:
            for j in nodes:
                if i != j and self.is_arrow(i, j):
                    graph.add_edge(i, j)
        self._digraph[key] = graph
        return graph
