"""
Minimal repair: the fewest edges whose removal makes a graph admit a J-colouring.
"""

import logging
from typing import List, Optional

from pydantic import BaseModel, Field

from src.errors import ScaleLimitExceeded
from src.extremal.bonding import BondingProfile, bonding_profile
from src.extremal.search import Admissible, EdgeSubsetSearch, Semantics
from src.graph.core import Edge, Graph
from src.rainbow.solver import j_number
from src.settings import DEFAULT_WORKERS, MAX_BONDING_EDGES

logger = logging.getLogger(__name__)


class RepairResult(BaseModel):
    """Minimum removal set E″ and the J value of G − E″."""
    edges: List[Edge] = Field(default_factory=list)
    repaired_j: int
    already_admissible: bool = False
    spanning_tree_bound: Optional[int] = Field(None, description="p − (n−1) for connected G")

    @property
    def size(self) -> int:
        return len(self.edges)


def minimal_repair(graph: Graph, workers: int = DEFAULT_WORKERS) -> RepairResult:
    """
    Find a minimum E″ such that G − E″ admits a J-colouring.

    For connected G any spanning tree is admissible, so |E″| <= p − (n−1)
    and the search never looks past that size.

    Raises:
        ScaleLimitExceeded: too many edges
    """
    if graph.size > MAX_BONDING_EDGES:
        raise ScaleLimitExceeded("edge count for subset search", graph.size, MAX_BONDING_EDGES)

    n, p = graph.order, graph.size
    bound = p - (n - 1) if graph.is_connected() else None

    current = j_number(graph)
    if current is not None:
        return RepairResult(repaired_j=current, already_admissible=True, spanning_tree_bound=bound)

    search = EdgeSubsetSearch(graph, Admissible())
    largest = bound if bound is not None else p
    hit = search.scan(range(0, largest + 1), workers)
    if hit is None:
        raise RuntimeError(f"no admissible spanning subgraph within {largest} removals")

    edges = search.witness(hit)
    repaired_j = j_number(graph.without_edges(edges))
    logger.debug(f"repair n={n} p={p}: removed {edges}, J = {repaired_j}")
    return RepairResult(edges=edges, repaired_j=repaired_j, spanning_tree_bound=bound)


def repair_profile(graph: Graph, semantics=Semantics.PLAIN, workers: int = DEFAULT_WORKERS) -> BondingProfile:
    """Bonding profile of the minimally repaired graph G − E″."""
    repair = minimal_repair(graph, workers)
    return bonding_profile(graph.without_edges(repair.edges), semantics, workers)
