"""
Graph Constants - Names and rendering attributes for the degree-4 graph layer.
"""


class GraphDegree:
    """The graph layer is specific to degree 4."""

    SUPPORTED = 4
    UNSUPPORTED_MESSAGE = "graphs require d=4"


class LemmaNames:
    """Stable identifiers of the structural checks (used in reports and logs)."""

    NO_COMMUTING = "commuting_pairs"
    ANTICOMMUTE_MATCHING = "anticommute_matching"
    NO_DIRECTED_TRIANGLE = "directed_triangles"
    DIRECTED_CYCLES = "cycle_lengths_diagonals"
    FORBIDDEN_QUADS = "forbidden_quads"
    UNIVERSAL_ORIENTATION = "universal_orientation"
    EDGE_TRICHOTOMY = "edge_trichotomy"
    ARROW_PATH = "arrow_path_order"

    # The six checkers every Kummer basis graph must pass
    CORE = (
        NO_COMMUTING,
        ANTICOMMUTE_MATCHING,
        NO_DIRECTED_TRIANGLE,
        DIRECTED_CYCLES,
        FORBIDDEN_QUADS,
        UNIVERSAL_ORIENTATION,
    )
    ALL = CORE + (EDGE_TRICHOTOMY, ARROW_PATH)


class DotStyle:
    """DOT attributes per edge label."""

    GRAPH_NAME = "kummer"
    NODE_ATTRS = 'node [shape=ellipse, fontname="Helvetica"];'
    ARROW_ATTRS = ""
    DASHED_ATTRS = "[style=dashed, dir=none]"
    COMMUTE_ATTRS = '[style=dotted, dir=none, color=red, label="commute"]'
    VERTEX_PREFIX = "m"
