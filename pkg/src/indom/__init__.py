"""Independent domination in subcubic graphs: exact solver, weight calculus, families and sweeps."""

from __future__ import annotations

from .graph import (
    DegreeExceedsThree,
    DuplicateEdge,
    GraphError,
    LoopEdge,
    SubcubicGraph,
    VertexSet,
    build_graph,
    components,
    disjoint_union,
    is_connected,
)
from .graph6 import ParseError, decode_graph6, encode_graph6
from .recognition import WeightReport, find_troublesome, is_bad_graph, tc, weight_report
from .solver import KERNEL, domination_number, independent_domination_number
from .weights import degree_profile, graph_weight, vertex_weight

__version__ = "0.1.0"

__all__ = [
    "KERNEL",
    "DegreeExceedsThree",
    "DuplicateEdge",
    "GraphError",
    "LoopEdge",
    "ParseError",
    "SubcubicGraph",
    "VertexSet",
    "WeightReport",
    "build_graph",
    "components",
    "decode_graph6",
    "degree_profile",
    "disjoint_union",
    "domination_number",
    "encode_graph6",
    "find_troublesome",
    "graph_weight",
    "independent_domination_number",
    "is_bad_graph",
    "is_connected",
    "tc",
    "vertex_weight",
    "weight_report",
]
