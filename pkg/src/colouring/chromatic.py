"""
Exact chromatic number and the χ⁻ / χ⁺ colouring conventions.

chromatic_number brackets χ between the clique number and a DSATUR greedy
colouring, then settles each k in between with DSATUR-ordered backtracking.

chi_minus_colouring formalises "colour as many vertices as possible with
c1, then c2, ...": among all proper χ-colourings it takes the one whose
class-size vector θ is lexicographically largest, and among those assigns
each colour the lexicographically smallest vertex set that still completes.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel

from src.colouring.base import Colouring, invert_colouring, normalise_colouring
from src.errors import GraphError, ScaleLimitExceeded
from src.graph.core import Graph, iter_bits
from src.settings import MAX_SWEEP_ORDER

logger = logging.getLogger(__name__)


class ChromaticResult(BaseModel):
    """χ(G) with a witness colouring."""
    number: int
    colouring: Colouring


# ============================================================================
# Bounds
# ============================================================================

def clique_number(graph: Graph) -> int:
    if graph.order == 0:
        return 0
    return max(len(clique) for clique in nx.find_cliques(graph.to_networkx()))


def dsatur_colouring(graph: Graph) -> List[int]:
    """
    Greedy DSATUR colouring.

    Repeatedly colours the uncoloured vertex with the most distinct
    neighbour colours (ties: higher degree, then lower index) with the
    smallest colour not seen in its neighbourhood.
    """
    n = graph.order
    colours = [0] * n
    saturation: List[set] = [set() for _ in range(n)]
    degrees = graph.degrees()
    uncoloured = set(range(n))

    while uncoloured:
        v = max(uncoloured, key=lambda u: (len(saturation[u]), degrees[u], -u))
        c = 1
        while c in saturation[v]:
            c += 1
        colours[v] = c
        uncoloured.discard(v)
        for u in iter_bits(graph.adjacency[v]):
            saturation[u].add(c)
    return colours


def _k_colour(graph: Graph, k: int) -> Optional[List[int]]:
    """Exact proper k-colouring by DSATUR-ordered backtracking, or None."""
    n = graph.order
    adjacency = graph.adjacency
    degrees = graph.degrees()
    colours = [0] * n

    def seen_colours(v: int) -> set:
        return {colours[u] for u in iter_bits(adjacency[v]) if colours[u]}

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colours[v]:
                continue
            key = (len(seen_colours(v)), degrees[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def backtrack(coloured: int, used: int) -> bool:
        if coloured == n:
            return True
        v = pick()
        forbidden = seen_colours(v)
        if len(forbidden) >= k:
            return False
        for c in range(1, min(used + 1, k) + 1):
            if c in forbidden:
                continue
            colours[v] = c
            if backtrack(coloured + 1, max(used, c)):
                return True
            colours[v] = 0
        return False

    return colours if backtrack(0, 0) else None


@lru_cache(maxsize=4096)
def chromatic_number(graph: Graph) -> ChromaticResult:
    """
    Exact chromatic number with a witness.

    Returns:
        ChromaticResult; the null graph on 0 vertices has χ = 0, any other
        edgeless graph χ = 1
    """
    n = graph.order
    if n == 0:
        return ChromaticResult(number=0, colouring=Colouring(colour_of=(), k=0))
    if graph.is_edgeless:
        return ChromaticResult(number=1, colouring=Colouring(colour_of=(1,) * n, k=1))

    lower = clique_number(graph)
    greedy = dsatur_colouring(graph)
    upper = max(greedy)
    logger.debug(f"chromatic bounds for n={n}, p={graph.size}: {lower}..{upper}")

    for k in range(lower, upper):
        witness = _k_colour(graph, k)
        if witness is not None:
            return ChromaticResult(number=k, colouring=normalise_colouring(witness))
    return ChromaticResult(number=upper, colouring=normalise_colouring(greedy))


# ============================================================================
# χ⁻ convention
# ============================================================================

class _ChiMinusSearch:
    """Memoised lexicographic-maximum θ search over vertex bit-sets."""

    def __init__(self, graph: Graph):
        self.adjacency = graph.adjacency
        self._independent: Dict[int, List[int]] = {}
        self._best: Dict[Tuple[int, int], Optional[Tuple[int, ...]]] = {}

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adjacency[v] & mask) for v in iter_bits(mask))

    def independent_subsets(self, rem: int) -> List[int]:
        """All independent subsets of ``rem``, the empty set included."""
        cached = self._independent.get(rem)
        if cached is not None:
            return cached
        if rem == 0:
            result = [0]
        else:
            v = (rem & -rem).bit_length() - 1
            rest = rem & ~(1 << v)
            without = self.independent_subsets(rest)
            with_v = [s | (1 << v) for s in self.independent_subsets(rest & ~self.adjacency[v])]
            result = without + with_v
        self._independent[rem] = result
        return result

    def best(self, rem: int, m: int) -> Optional[Tuple[int, ...]]:
        """Lexicographically largest θ for colouring ``rem`` with exactly m nonempty classes."""
        if m == 0:
            return () if rem == 0 else None
        if rem == 0 or rem.bit_count() < m:
            return None
        if m == 1:
            return (rem.bit_count(),) if self.is_independent(rem) else None

        key = (rem, m)
        if key in self._best:
            return self._best[key]

        candidates = sorted(
            (s for s in self.independent_subsets(rem) if s),
            key=lambda s: -s.bit_count(),
        )
        result: Optional[Tuple[int, ...]] = None
        for s in candidates:
            size = s.bit_count()
            if result is not None and size < result[0]:
                break
            tail = self.best(rem & ~s, m - 1)
            if tail is None:
                continue
            candidate = (size,) + tail
            if result is None or candidate > result:
                result = candidate

        self._best[key] = result
        return result


def chi_minus_colouring(graph: Graph) -> Colouring:
    """
    Canonical χ⁻-colouring.

    Raises:
        GraphError: empty graph
        ScaleLimitExceeded: order above the sweep cap
    """
    n = graph.order
    if n == 0:
        raise GraphError("chi_minus_colouring requires a nonempty graph")
    if n > MAX_SWEEP_ORDER:
        raise ScaleLimitExceeded("order for chi-minus search", n, MAX_SWEEP_ORDER)

    chi = chromatic_number(graph).number
    search = _ChiMinusSearch(graph)
    rem = (1 << n) - 1
    target = search.best(rem, chi)
    if target is None:
        raise RuntimeError(f"no proper {chi}-colouring found; chromatic search is inconsistent")

    colours = [0] * n
    m = chi
    for index, size in enumerate(target):
        tail = target[index + 1:]
        options = [
            s for s in search.independent_subsets(rem)
            if s.bit_count() == size and search.best(rem & ~s, m - 1) == tail
        ]
        chosen = min(options, key=lambda s: tuple(iter_bits(s)))
        for v in iter_bits(chosen):
            colours[v] = index + 1
        rem &= ~chosen
        m -= 1

    logger.debug(f"chi-minus theta {target} for n={n}")
    return Colouring(colour_of=tuple(colours), k=chi)


def chi_plus_colouring(graph: Graph) -> Colouring:
    """Inverse of the canonical χ⁻-colouring."""
    return invert_colouring(chi_minus_colouring(graph))
