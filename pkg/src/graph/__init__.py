"""
Graph representation, families, formats and operations.
"""

from .core import Edge, Graph, StructureReport, build_graph, iter_bits, structure
from .families import GraphFamily, generate
from .formats import GraphFormat, parse_graph, serialize_graph
from .notation import GraphSpec, parse_graph_name, parse_graph_spec
from .operations import CombineKind, DerivativeKind, combine, derive, swap_cartesian_index

__all__ = [
    "Edge",
    "Graph",
    "StructureReport",
    "build_graph",
    "iter_bits",
    "structure",
    "GraphFamily",
    "generate",
    "GraphFormat",
    "parse_graph",
    "serialize_graph",
    "GraphSpec",
    "parse_graph_name",
    "parse_graph_spec",
    "CombineKind",
    "DerivativeKind",
    "combine",
    "derive",
    "swap_cartesian_index",
]
