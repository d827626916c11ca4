"""
Exact edge-subset search.

Subsets of the edge list are tried cardinality level by cardinality level,
each level in lexicographic order of sorted edge indices, so the first subset
that satisfies the predicate is the lexicographically least optimum. With
workers > 1 each level is split by leading edge index across a process
pool and the hits are merged by least leading index, which gives the same
answer as the serial scan.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from src.colouring.chromatic import chromatic_number
from src.errors import ScaleLimitExceeded
from src.graph.core import Edge, Graph
from src.rainbow.solver import admits_j, find_rainbow_colouring
from src.settings import MAX_BONDING_EDGES

logger = logging.getLogger(__name__)


class Semantics(str, Enum):
    """Whether G − E′ must stay connected when the target k is at least 2."""
    PLAIN = "plain"
    CONNECTED_FOR_K_GE_2 = "connected_for_k_ge_2"


# ============================================================================
# Predicates
# ============================================================================

def has_j_value(graph: Graph, k: int, semantics=Semantics.PLAIN) -> bool:
    """
    True iff J(graph) == k (and graph is connected when the semantics ask for it).

    Cheap exits first: J = 1 exactly for edgeless graphs, J <= δ+1, J >= χ,
    and a bipartite graph with a pendant vertex has J = 2.
    """
    semantics = Semantics(semantics)
    if k == 1:
        return graph.is_edgeless
    if graph.is_edgeless:
        return False
    if semantics is Semantics.CONNECTED_FOR_K_GE_2 and not graph.is_connected():
        return False

    bound = graph.min_degree + 1
    if bound < k:
        return False
    if k == 2:
        if not graph.is_bipartite():
            return False
        if bound == 2:
            return True
    if chromatic_number(graph).number > k:
        return False
    if find_rainbow_colouring(graph, k) is None:
        return False
    return all(find_rainbow_colouring(graph, larger) is None for larger in range(k + 1, bound + 1))


def is_admissible(graph: Graph) -> bool:
    return admits_j(graph)


# ============================================================================
# Subset search
# ============================================================================

class EdgeSubsetSearch:
    """
    Searches removal sets E′ of a graph for a predicate on G − E′.

    Predicate results are memoised by the removal bit-mask, so r⁻ and r⁺
    scans over the same graph and predicate share work.
    """

    def __init__(self, graph: Graph, predicate: Callable[[Graph], bool]):
        if graph.size > MAX_BONDING_EDGES:
            raise ScaleLimitExceeded("edge count for subset search", graph.size, MAX_BONDING_EDGES)
        self.graph = graph
        self.edges: List[Edge] = graph.edges()
        self.predicate = predicate
        self._memo: Dict[int, bool] = {}
        self.evaluations = 0

    def test(self, indices: Tuple[int, ...]) -> bool:
        mask = 0
        for i in indices:
            mask |= 1 << i
        cached = self._memo.get(mask)
        if cached is None:
            self.evaluations += 1
            cached = self.predicate(self.graph.without_edges(self.edges[i] for i in indices))
            self._memo[mask] = cached
        return cached

    def first_at_size(self, size: int, leader: Optional[int] = None) -> Optional[Tuple[int, ...]]:
        """Lexicographically least hit of the given size, optionally with a fixed least index."""
        p = len(self.edges)
        if leader is None:
            candidates: Iterable[Tuple[int, ...]] = itertools.combinations(range(p), size)
        elif size == 0:
            return None
        else:
            candidates = (
                (leader,) + rest
                for rest in itertools.combinations(range(leader + 1, p), size - 1)
            )
        for indices in candidates:
            if self.test(indices):
                return indices
        return None

    def scan(self, sizes: Iterable[int], workers: int = 1) -> Optional[Tuple[int, ...]]:
        """First hit over the sizes in the given order."""
        for size in sizes:
            if workers > 1 and size > 0:
                hit = self._parallel_level(size, workers)
            else:
                hit = self.first_at_size(size)
            if hit is not None:
                logger.debug(f"subset hit at size {size} after {self.evaluations} evaluations")
                return hit
        return None

    def _parallel_level(self, size: int, workers: int) -> Optional[Tuple[int, ...]]:
        p = len(self.edges)
        leaders = range(0, p - size + 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = list(pool.map(
                _level_worker,
                itertools.repeat(self.graph),
                itertools.repeat(self.predicate),
                itertools.repeat(size),
                leaders,
            ))
        for hit in hits:
            if hit is not None:
                return hit
        return None

    def witness(self, indices: Tuple[int, ...]) -> List[Edge]:
        return [self.edges[i] for i in indices]


def _level_worker(graph: Graph, predicate: Callable[[Graph], bool], size: int, leader: int):
    return EdgeSubsetSearch(graph, predicate).first_at_size(size, leader)


class TargetValue:
    """Picklable predicate: J(H) == k under the given semantics."""

    def __init__(self, k: int, semantics=Semantics.PLAIN):
        self.k = k
        self.semantics = Semantics(semantics)

    def __call__(self, graph: Graph) -> bool:
        return has_j_value(graph, self.k, self.semantics)


class Admissible:
    """Picklable predicate: H admits a J-colouring."""

    def __call__(self, graph: Graph) -> bool:
        return is_admissible(graph)


def removal_size_range(graph: Graph, k: int, semantics) -> range:
    """
    Removal sizes that can possibly reach J = k.

    J = 1 needs every edge gone. Otherwise δ(G − E′) >= k−1 keeps at least
    ceil(n(k−1)/2) edges, and a connected result keeps at least n−1.
    """
    n, p = graph.order, graph.size
    if k == 1:
        return range(p, p + 1)
    most = p - (n * (k - 1) + 1) // 2
    if Semantics(semantics) is Semantics.CONNECTED_FOR_K_GE_2:
        most = min(most, p - (n - 1))
    return range(0, max(most, -1) + 1)
