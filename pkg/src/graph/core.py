"""
Graph value type and structural queries.

Vertices are dense indices 0..n-1 and adjacency is one integer bit-set per
vertex, so neighbourhood tests in the solvers reduce to mask arithmetic.
Graph values are frozen and safe to share between worker processes.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import GraphError, ScaleLimitExceeded
from src.settings import MAX_STRUCTURAL_ORDER

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ============================================================================
# Graph
# ============================================================================

class Graph(BaseModel):
    """Simple undirected graph on vertices 0..order-1."""
    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=0)
    adjacency: Tuple[int, ...] = Field(default_factory=tuple)

    @model_validator(mode="after")
    def validate_simple(self) -> "Graph":
        """Reject loops, out-of-range neighbours and asymmetric adjacency."""
        if self.order > MAX_STRUCTURAL_ORDER:
            raise ValueError(
                f"order {self.order} exceeds the structural limit {MAX_STRUCTURAL_ORDER}"
            )
        if len(self.adjacency) != self.order:
            raise ValueError(
                f"adjacency has {len(self.adjacency)} entries for order {self.order}"
            )
        full = (1 << self.order) - 1
        for v, mask in enumerate(self.adjacency):
            if mask < 0 or mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.order - 1}")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(mask):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric between {v} and {u}")
        return self

    @classmethod
    def trusted(cls, order: int, adjacency: Sequence[int]) -> "Graph":
        """Build without validation; only for adjacency derived from a valid graph."""
        return cls.model_construct(order=order, adjacency=tuple(adjacency))

    # ------------------------------------------------------------------
    # Basic measures
    # ------------------------------------------------------------------

    @property
    def size(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> Tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adjacency)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def is_edgeless(self) -> bool:
        return not any(self.adjacency)

    def neighbours(self, v: int) -> List[int]:
        return list(iter_bits(self.adjacency[v]))

    def closed_mask(self, v: int) -> int:
        """Bit-set of N[v]."""
        return self.adjacency[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """All edges as (u, v) with u < v, in sorted order."""
        result = []
        for u, mask in enumerate(self.adjacency):
            for v in iter_bits(mask >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    # ------------------------------------------------------------------
    # Connectivity
    # ------------------------------------------------------------------

    def component_masks(self) -> List[int]:
        """Vertex bit-sets of the connected components, ordered by least vertex."""
        remaining = (1 << self.order) - 1
        components = []
        while remaining:
            frontier = remaining & -remaining
            seen = frontier
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adjacency[v]
                frontier = reach & ~seen
                seen |= frontier
            components.append(seen)
            remaining &= ~seen
        return components

    def is_connected(self) -> bool:
        """True iff the graph has exactly one component (False for the empty graph)."""
        return len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.order >= 1 and self.size == self.order - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def without_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Copy of the graph with the given (existing) edges removed."""
        adjacency = list(self.adjacency)
        for u, v in edges:
            adjacency[u] &= ~(1 << v)
            adjacency[v] &= ~(1 << u)
        return Graph.trusted(self.order, adjacency)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled 0..len(vertices)-1 in the given order."""
        position = {v: i for i, v in enumerate(vertices)}
        adjacency = []
        for v in vertices:
            mask = 0
            for u in iter_bits(self.adjacency[v]):
                if u in position:
                    mask |= 1 << position[u]
            adjacency.append(mask)
        return Graph.trusted(len(vertices), adjacency)

    # ------------------------------------------------------------------
    # networkx bridge
    # ------------------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph, nodes: Optional[Sequence] = None) -> "Graph":
        """
        Convert a networkx graph, numbering vertices in the order of ``nodes``.

        Args:
            g: Simple undirected networkx graph
            nodes: Node labels in index order (defaults to sorted labels)

        Returns:
            Graph with the same adjacency
        """
        if nodes is None:
            nodes = sorted(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        if len(index) != g.number_of_nodes():
            raise GraphError("node ordering does not cover the networkx graph")
        edges = [(index[a], index[b]) for a, b in g.edges()]
        return build_graph(len(index), edges)


# ============================================================================
# Construction
# ============================================================================

def build_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph from an edge list.

    Args:
        order: Number of vertices
        edges: Pairs of vertex indices; duplicates are merged

    Returns:
        Graph with exactly the given edges

    Raises:
        GraphError: index out of range or self-loop
        ScaleLimitExceeded: order beyond the structural limit
    """
    if order < 0:
        raise GraphError(f"order must be non-negative, got {order}")
    if order > MAX_STRUCTURAL_ORDER:
        raise ScaleLimitExceeded("graph order", order, MAX_STRUCTURAL_ORDER)

    adjacency = [0] * order
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}): vertex index out of range for order {order}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}): self-loop")
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    return Graph.trusted(order, adjacency)


# ============================================================================
# Structure report
# ============================================================================

class StructureReport(BaseModel):
    """Degree and connectivity summary of a graph."""
    order: int
    size: int
    degrees: List[int]
    degree_sequence: List[int] = Field(..., description="Non-increasing")
    min_degree: int
    max_degree: int
    connected: bool
    components: List[List[int]]
    bipartite: bool
    pendant: List[int]
    internal: List[int]
    isolated: List[int]
    diameter: int
    diameter_path: List[int]

    @model_validator(mode="after")
    def check_partition(self) -> "StructureReport":
        """Pendant, internal and isolated vertices partition V."""
        classified = sorted(self.pendant + self.internal + self.isolated)
        if classified != list(range(self.order)):
            raise ValueError("pendant/internal/isolated sets do not partition the vertices")
        return self


def _diameter_path(graph: Graph, g: nx.Graph) -> Tuple[int, List[int]]:
    """Longest shortest path; ties go to the lexicographically least endpoint pair."""
    if graph.order == 0:
        return 0, []
    lengths: Dict[int, Dict[int, int]] = dict(nx.all_pairs_shortest_path_length(g))
    best_key = None
    best_pair = (0, 0)
    for u in range(graph.order):
        for v, dist in lengths[u].items():
            if v < u:
                continue
            key = (dist, -u, -v)
            if best_key is None or key > best_key:
                best_key = key
                best_pair = (u, v)
    u, v = best_pair
    return best_key[0], nx.shortest_path(g, u, v)


def structure(graph: Graph) -> StructureReport:
    """Compute the StructureReport of a graph."""
    g = graph.to_networkx()
    degrees = list(graph.degrees())
    components = [list(iter_bits(mask)) for mask in graph.component_masks()]
    diameter, path = _diameter_path(graph, g)
    return StructureReport(
        order=graph.order,
        size=graph.size,
        degrees=degrees,
        degree_sequence=sorted(degrees, reverse=True),
        min_degree=graph.min_degree,
        max_degree=graph.max_degree,
        connected=len(components) == 1,
        components=components,
        bipartite=nx.is_bipartite(g),
        pendant=[v for v, d in enumerate(degrees) if d == 1],
        internal=[v for v, d in enumerate(degrees) if d >= 2],
        isolated=[v for v, d in enumerate(degrees) if d == 0],
        diameter=diameter,
        diameter_path=path,
    )
