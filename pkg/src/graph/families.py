"""
Standard graph families with canonical vertex numbering.

Paths and cycles are numbered consecutively, stars have their centre at 0,
and complete bipartite graphs list the first part before the second.
"""

import logging
import random
from enum import Enum
from typing import Optional

import networkx as nx

from src.errors import GraphError
from src.graph.core import Graph

logger = logging.getLogger(__name__)


class GraphFamily(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete_bipartite"
    NULL = "null"
    RANDOM_TREE = "random_tree"
    RANDOM_GRAPH = "random_graph"
    PETERSEN = "petersen"


def _random_tree(n: int, seed: int) -> nx.Graph:
    """Uniform labelled tree from a seeded Prüfer sequence."""
    if n == 1:
        return nx.empty_graph(1)
    if n == 2:
        return nx.path_graph(2)
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return nx.from_prufer_sequence(sequence)


def generate(
    family,
    n: Optional[int] = None,
    m: Optional[int] = None,
    seed: Optional[int] = None,
    edge_probability: float = 0.5,
) -> Graph:
    """
    Generate a member of a standard family.

    Args:
        family: GraphFamily (or its string value)
        n: Order; number of leaves for stars; first part size for complete_bipartite
        m: Second part size for complete_bipartite
        seed: Required for random_tree and random_graph
        edge_probability: Edge probability for random_graph

    Returns:
        Graph with canonical numbering

    Raises:
        GraphError: parameters outside the family's domain
    """
    family = GraphFamily(family)

    if family is GraphFamily.PETERSEN:
        return Graph.from_networkx(nx.petersen_graph())

    if n is None:
        raise GraphError(f"{family.value} requires a size parameter n")

    if family is GraphFamily.PATH:
        if n < 1:
            raise GraphError(f"path requires n >= 1, got {n}")
        g = nx.path_graph(n)
    elif family is GraphFamily.CYCLE:
        if n < 3:
            raise GraphError(f"cycle requires n >= 3, got {n}")
        g = nx.cycle_graph(n)
    elif family is GraphFamily.COMPLETE:
        if n < 1:
            raise GraphError(f"complete graph requires n >= 1, got {n}")
        g = nx.complete_graph(n)
    elif family is GraphFamily.STAR:
        if n < 1:
            raise GraphError(f"star requires at least 1 leaf, got {n}")
        g = nx.star_graph(n)
    elif family is GraphFamily.COMPLETE_BIPARTITE:
        if n < 1 or m is None or m < 1:
            raise GraphError(f"complete_bipartite requires part sizes >= 1, got {n}, {m}")
        g = nx.complete_bipartite_graph(n, m)
    elif family is GraphFamily.NULL:
        if n < 0:
            raise GraphError(f"null graph requires n >= 0, got {n}")
        g = nx.empty_graph(n)
    elif family is GraphFamily.RANDOM_TREE:
        if n < 1:
            raise GraphError(f"random_tree requires n >= 1, got {n}")
        if seed is None:
            raise GraphError("random_tree requires a seed")
        g = _random_tree(n, seed)
    else:
        if n < 1:
            raise GraphError(f"random_graph requires n >= 1, got {n}")
        if seed is None:
            raise GraphError("random_graph requires a seed")
        if not 0.0 <= edge_probability <= 1.0:
            raise GraphError(f"edge probability must lie in [0, 1], got {edge_probability}")
        g = nx.gnp_random_graph(n, edge_probability, seed=seed)

    return Graph.from_networkx(g, nodes=range(g.number_of_nodes()))


def path(n: int) -> Graph:
    return generate(GraphFamily.PATH, n)


def cycle(n: int) -> Graph:
    return generate(GraphFamily.CYCLE, n)


def complete(n: int) -> Graph:
    return generate(GraphFamily.COMPLETE, n)


def star(leaves: int) -> Graph:
    return generate(GraphFamily.STAR, leaves)


def null(n: int) -> Graph:
    return generate(GraphFamily.NULL, n)
