"""
Exact J / J* solvers.

find_rainbow_colouring searches proper k-colourings in vertex-index order,
introducing colours in first-occurrence order, so the first success is the
lexicographically least valid assignment. Two prunings keep it small:

- the vertices still uncoloured must be able to introduce the unused colours;
- every required vertex u whose N[u] received a colour must still be able to
  see its missing colours through the uncoloured part of N[u].

Feasible k are not downward closed, so profiles test every k between χ and
the degree bound.
"""

import itertools
import logging
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from src.colouring.base import Colouring
from src.colouring.chromatic import chromatic_number
from src.errors import ScaleLimitExceeded
from src.graph.core import Graph, iter_bits
from src.rainbow.neighbourhood import RainbowMode, required_mask, validate_rainbow_colouring
from src.settings import MAX_PROFILE_ORDER, NAIVE_MAX_ORDER

logger = logging.getLogger(__name__)


class JProfile(BaseModel):
    """Feasible rainbow colour counts of a graph under one mode."""
    mode: RainbowMode
    order: int
    upper_bound: int
    feasible_k: List[int] = Field(default_factory=list)
    witnesses: Dict[int, Colouring] = Field(default_factory=dict)
    j_value: Optional[int] = None
    convention_applied: bool = False

    @property
    def admissible(self) -> bool:
        return self.j_value is not None

    def to_summary(self) -> dict:
        return {"mode": self.mode.value, "feasible_k": self.feasible_k, "j": self.j_value}


def upper_bound(graph: Graph, mode) -> int:
    """
    Largest k worth testing.

    A required vertex sees at most d(v)+1 colours, so k <= 1 + the least
    degree among required vertices; with no required vertex k <= n.
    """
    mode = RainbowMode(mode)
    if graph.order == 0:
        return 0
    if mode is RainbowMode.ALL_VERTICES:
        return graph.min_degree + 1
    internal = [d for d in graph.degrees() if d >= 2]
    return 1 + min(internal) if internal else graph.order


def find_rainbow_colouring(graph: Graph, k: int, mode=RainbowMode.ALL_VERTICES) -> Optional[Colouring]:
    """
    Find the lexicographically least proper k-colouring with every required vertex rainbow.

    Args:
        graph: Input graph
        k: Exact number of colours (>= 1)
        mode: RainbowMode

    Returns:
        Witness Colouring, or None when no such colouring exists
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = graph.order
    if n == 0 or k > n:
        return None

    adjacency = graph.adjacency
    closed = [graph.closed_mask(v) for v in range(n)]
    required = list(iter_bits(required_mask(graph, mode)))
    if any(closed[u].bit_count() < k for u in required):
        return None
    watchers = [[u for u in required if closed[u] >> v & 1] for v in range(n)]

    colours = [0] * n
    class_masks = [0] * (k + 1)
    assigned = 0

    def still_feasible(v: int) -> bool:
        for u in watchers[v]:
            neighbourhood = closed[u]
            seen = 0
            for c in range(1, k + 1):
                if class_masks[c] & neighbourhood:
                    seen += 1
            if k - seen > (neighbourhood & ~assigned).bit_count():
                return False
        return True

    def backtrack(v: int, used: int) -> bool:
        nonlocal assigned
        if v == n:
            return used == k
        if n - v < k - used:
            return False
        bit = 1 << v
        for c in range(1, min(used + 1, k) + 1):
            if class_masks[c] & adjacency[v]:
                continue
            colours[v] = c
            class_masks[c] |= bit
            assigned |= bit
            if still_feasible(v) and backtrack(v + 1, max(used, c)):
                return True
            assigned &= ~bit
            class_masks[c] &= ~bit
            colours[v] = 0
        return False

    if not backtrack(0, 0):
        return None

    witness = Colouring(colour_of=tuple(colours), k=k)
    if not validate_rainbow_colouring(graph, witness, mode):
        raise RuntimeError(f"solver produced an invalid witness for k={k}: {colours}")
    return witness


def _check_scale(graph: Graph, max_order: Optional[int]) -> None:
    limit = MAX_PROFILE_ORDER if max_order is None else max_order
    if graph.order > limit:
        raise ScaleLimitExceeded("order for J-profile", graph.order, limit)


def j_profile(graph: Graph, mode=RainbowMode.ALL_VERTICES, max_order: Optional[int] = None) -> JProfile:
    """
    Every feasible colour count of a graph under a mode.

    Edgeless graphs (the null graphs) take the value 1 by convention.

    Raises:
        ScaleLimitExceeded: order above the profile cap
    """
    mode = RainbowMode(mode)
    _check_scale(graph, max_order)
    n = graph.order
    bound = upper_bound(graph, mode)

    if graph.is_edgeless:
        witnesses = {1: Colouring(colour_of=(1,) * n, k=1)} if n else {}
        return JProfile(
            mode=mode, order=n, upper_bound=bound,
            feasible_k=[1], witnesses=witnesses, j_value=1, convention_applied=True,
        )

    chi = chromatic_number(graph).number
    feasible, witnesses = [], {}
    for k in range(chi, bound + 1):
        witness = find_rainbow_colouring(graph, k, mode)
        if witness is not None:
            feasible.append(k)
            witnesses[k] = witness

    j_value = max(feasible) if feasible else None
    logger.debug(f"{mode.value} profile n={n} chi={chi} bound={bound}: {feasible}")
    return JProfile(
        mode=mode, order=n, upper_bound=bound,
        feasible_k=feasible, witnesses=witnesses, j_value=j_value,
    )


def max_feasible_k(graph: Graph, mode=RainbowMode.ALL_VERTICES, max_order: Optional[int] = None) -> Optional[int]:
    """Largest feasible k, searched downward from the bound."""
    _check_scale(graph, max_order)
    if graph.is_edgeless:
        return 1
    chi = chromatic_number(graph).number
    for k in range(upper_bound(graph, mode), chi - 1, -1):
        if find_rainbow_colouring(graph, k, mode) is not None:
            return k
    return None


def j_number(graph: Graph, max_order: Optional[int] = None) -> Optional[int]:
    """J(G), or None when G admits no J-colouring."""
    return max_feasible_k(graph, RainbowMode.ALL_VERTICES, max_order)


def j_star_number(graph: Graph, max_order: Optional[int] = None) -> Optional[int]:
    """J*(G); vertices of degree <= 1 are exempt."""
    return max_feasible_k(graph, RainbowMode.INTERNAL_ONLY, max_order)


def admits_j(graph: Graph, max_order: Optional[int] = None) -> bool:
    return j_number(graph, max_order) is not None


def certified_j_number(graph: Graph, witness: Colouring) -> Optional[int]:
    """
    J(G) from a witness alone, when the witness meets the δ+1 bound.

    Lets large constructions (coronas) be settled without a search.
    """
    if graph.order == 0 or graph.is_edgeless:
        return None
    if not validate_rainbow_colouring(graph, witness, RainbowMode.ALL_VERTICES):
        return None
    return witness.k if witness.k == graph.min_degree + 1 else None


def naive_profile(graph: Graph, mode=RainbowMode.ALL_VERTICES) -> List[int]:
    """
    Feasible k by plain enumeration of every assignment of k colours.

    Reference oracle for the pruned solver; k above the degree bound is
    skipped since no required vertex could see that many colours. Vertex 0
    is fixed to colour 1, as colour names are interchangeable.
    """
    n = graph.order
    if n > NAIVE_MAX_ORDER:
        raise ScaleLimitExceeded("order for naive enumeration", n, NAIVE_MAX_ORDER)
    if graph.is_edgeless:
        return [1]

    edges = graph.edges()
    closed = [list(iter_bits(graph.closed_mask(v))) for v in iter_bits(required_mask(graph, mode))]

    def valid(values, k: int) -> bool:
        if any(values[u] == values[v] for u, v in edges):
            return False
        if len(set(values)) != k:
            return False
        return all(len({values[u] for u in neighbourhood}) == k for neighbourhood in closed)

    feasible = []
    for k in range(1, upper_bound(graph, mode) + 1):
        if any(valid((1,) + rest, k) for rest in itertools.product(range(1, k + 1), repeat=n - 1)):
            feasible.append(k)
    return feasible
