"""
DOT Exporter - Graphviz text for Kummer graphs.

Arrows become solid directed edges, dashed pairs dashed edges without
arrowheads and commuting pairs dotted red edges labelled "commute".
"""

from typing import List, Optional

from src.common.constants.graph_constants import DotStyle
from src.domain.models.kummer_graph import EdgeLabel, KummerGraph
from src.infrastructure.persistence.basis_document import PathLike, write_text


def _edge(tail: str, head: str, attrs: str) -> str:
    suffix = f" {attrs}" if attrs else ""
    return f'  "{tail}" -> "{head}"{suffix};'


def to_dot(graph: KummerGraph) -> str:
    """
    Render a graph as a DOT digraph.

    One edge per unordered vertex pair; output depends only on the vertex
    order and the phases.
    """
    lines: List[str] = [f"digraph {DotStyle.GRAPH_NAME} {{"]
    if graph.size:
        lines.append(f"  {DotStyle.NODE_ATTRS}")
    for name in graph.names:
        lines.append(f'  "{name}";')
    for i in range(graph.size):
        for j in range(i + 1, graph.size):
            label = graph.label(i, j)
            a, b = graph.names[i], graph.names[j]
            if label is EdgeLabel.ARROW_TO:
                lines.append(_edge(a, b, DotStyle.ARROW_ATTRS))
            elif label is EdgeLabel.ARROW_FROM:
                lines.append(_edge(b, a, DotStyle.ARROW_ATTRS))
            elif label is EdgeLabel.DASHED:
                lines.append(_edge(a, b, DotStyle.DASHED_ATTRS))
            else:
                lines.append(_edge(a, b, DotStyle.COMMUTE_ATTRS))
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(graph: KummerGraph, path: Optional[PathLike]) -> str:
    """Write DOT text to ``path`` (stdout when None) and return it."""
    text = to_dot(graph)
    write_text(path, text)
    return text
