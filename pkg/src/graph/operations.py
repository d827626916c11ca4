"""
Unary graph derivatives and binary graph operations.

Numbering of every result is fixed: original vertices first, then
edge-vertices in sorted edge order; for binary operations G's vertices come
first. Cartesian products number (v, u) as v * n_H + u.
"""

import logging
from enum import Enum
from typing import List, Tuple

import networkx as nx

from src.errors import GraphError
from src.graph.core import Edge, Graph, build_graph

logger = logging.getLogger(__name__)


class DerivativeKind(str, Enum):
    COMPLEMENT = "complement"
    LINE = "line"
    JUMP = "jump"
    MIDDLE = "middle"
    TOTAL = "total"
    CENTRAL = "central"
    SUBDIVISION = "subdivision"


class CombineKind(str, Enum):
    DISJOINT_UNION = "disjoint_union"
    JOIN = "join"
    CORONA = "corona"
    CARTESIAN = "cartesian"


# ============================================================================
# Derivatives
# ============================================================================

def _line_edges(edges: List[Edge]) -> List[Tuple[int, int]]:
    """Edge-index pairs (i, j) of the line graph, using networkx."""
    g = nx.Graph()
    g.add_edges_from(edges)
    line = nx.line_graph(g)
    index = {edge: i for i, edge in enumerate(edges)}
    pairs = []
    for a, b in line.edges():
        i = index[tuple(sorted(a))]
        j = index[tuple(sorted(b))]
        pairs.append((min(i, j), max(i, j)))
    return sorted(pairs)


def _incidence_edges(n: int, edges: List[Edge]) -> List[Tuple[int, int]]:
    """Original vertex to edge-vertex incidences, edge-vertex i numbered n + i."""
    pairs = []
    for i, (u, v) in enumerate(edges):
        pairs.append((u, n + i))
        pairs.append((v, n + i))
    return pairs


def derive(graph: Graph, kind) -> Graph:
    """
    Build a derivative graph.

    Args:
        graph: Input graph
        kind: DerivativeKind (or its string value)

    Returns:
        The derived graph with deterministic numbering

    Raises:
        GraphError: line/jump on an edgeless graph; jump on fewer than 3 vertices
    """
    kind = DerivativeKind(kind)
    n = graph.order
    edges = graph.edges()
    p = len(edges)

    if kind in (DerivativeKind.LINE, DerivativeKind.JUMP) and p == 0:
        raise GraphError(f"{kind.value} graph needs at least one edge")
    if kind is DerivativeKind.JUMP and n < 3:
        raise GraphError(f"jump graph is defined for order n >= 3, got {n}")

    if kind is DerivativeKind.COMPLEMENT:
        return Graph.from_networkx(nx.complement(graph.to_networkx()), nodes=range(n))

    if kind is DerivativeKind.LINE:
        return build_graph(p, _line_edges(edges))

    if kind is DerivativeKind.JUMP:
        line = build_graph(p, _line_edges(edges))
        return Graph.from_networkx(nx.complement(line.to_networkx()), nodes=range(p))

    if kind is DerivativeKind.SUBDIVISION:
        return build_graph(n + p, _incidence_edges(n, edges))

    if kind is DerivativeKind.MIDDLE:
        pairs = _incidence_edges(n, edges)
        pairs += [(n + i, n + j) for i, j in _line_edges(edges)]
        return build_graph(n + p, pairs)

    if kind is DerivativeKind.TOTAL:
        pairs = list(edges) + _incidence_edges(n, edges)
        pairs += [(n + i, n + j) for i, j in _line_edges(edges)]
        return build_graph(n + p, pairs)

    # central: subdivide, then join originals that were non-adjacent
    complement = nx.complement(graph.to_networkx())
    pairs = _incidence_edges(n, edges) + [tuple(sorted(e)) for e in complement.edges()]
    return build_graph(n + p, pairs)


# ============================================================================
# Binary operations
# ============================================================================

def combine(g: Graph, h: Graph, kind) -> Graph:
    """
    Combine two graphs.

    Args:
        g: Left operand (its vertices are numbered first)
        h: Right operand
        kind: CombineKind (or its string value)

    Returns:
        disjoint union, join, corona G∘H or cartesian product G□H

    Raises:
        GraphError: corona with an empty operand
    """
    kind = CombineKind(kind)
    ng, nh = g.order, h.order

    if kind is CombineKind.DISJOINT_UNION:
        union = nx.disjoint_union(g.to_networkx(), h.to_networkx())
        return Graph.from_networkx(union, nodes=range(ng + nh))

    if kind is CombineKind.JOIN:
        union = nx.disjoint_union(g.to_networkx(), h.to_networkx())
        union.add_edges_from((v, ng + u) for v in range(ng) for u in range(nh))
        return Graph.from_networkx(union, nodes=range(ng + nh))

    if kind is CombineKind.CORONA:
        if ng == 0 or nh == 0:
            raise GraphError("corona requires both operands to be nonempty")
        pairs = list(g.edges())
        h_edges = h.edges()
        for v in range(ng):
            offset = ng + v * nh
            pairs.extend((offset + a, offset + b) for a, b in h_edges)
            pairs.extend((v, offset + u) for u in range(nh))
        return build_graph(ng + ng * nh, pairs)

    product = nx.cartesian_product(g.to_networkx(), h.to_networkx())
    nodes = [(v, u) for v in range(ng) for u in range(nh)]
    return Graph.from_networkx(product, nodes=nodes)


def swap_cartesian_index(index: int, ng: int, nh: int) -> int:
    """Map vertex (v, u) of G□H to vertex (u, v) of H□G."""
    v, u = divmod(index, nh)
    return u * ng + v
