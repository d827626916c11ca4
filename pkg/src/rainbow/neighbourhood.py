"""
Rainbow neighbourhoods.

A vertex v yields a rainbow neighbourhood under a colouring with k colours
when its closed neighbourhood N[v] meets every one of the k colour classes.
"""

import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel

from src.colouring.base import Colouring, enumerate_proper_colourings, is_proper
from src.colouring.chromatic import chi_minus_colouring, chromatic_number
from src.errors import ColouringError, GraphError, ScaleLimitExceeded
from src.graph.core import Graph, iter_bits
from src.settings import MAX_SWEEP_ORDER

logger = logging.getLogger(__name__)


class RainbowMode(str, Enum):
    """Which vertices must be rainbow: all of them (J) or the internal ones (J*)."""
    ALL_VERTICES = "all_vertices"
    INTERNAL_ONLY = "internal_only"


def required_mask(graph: Graph, mode) -> int:
    """Bit-set of vertices that must be rainbow; internal means degree >= 2."""
    mode = RainbowMode(mode)
    if mode is RainbowMode.ALL_VERTICES:
        return (1 << graph.order) - 1
    mask = 0
    for v, d in enumerate(graph.degrees()):
        if d >= 2:
            mask |= 1 << v
    return mask


def _is_rainbow(graph: Graph, class_masks: List[int], k: int, v: int) -> bool:
    closed = graph.closed_mask(v)
    return all(class_masks[c] & closed for c in range(1, k + 1))


def rainbow_vertices(graph: Graph, colouring: Colouring) -> List[int]:
    """Vertices whose closed neighbourhood sees every colour (no properness check)."""
    masks = colouring.class_masks()
    return [v for v in range(graph.order) if _is_rainbow(graph, masks, colouring.k, v)]


def is_rainbow_vertex(graph: Graph, colouring: Colouring, v: int) -> bool:
    """
    Test whether v yields a rainbow neighbourhood.

    Raises:
        ColouringError: colouring improper or not defined on the graph
        GraphError: vertex out of range
    """
    if not is_proper(graph, colouring):
        raise ColouringError("rainbow test requires a proper colouring")
    if not 0 <= v < graph.order:
        raise GraphError(f"vertex {v} out of range for order {graph.order}")
    return _is_rainbow(graph, colouring.class_masks(), colouring.k, v)


def validate_rainbow_colouring(graph: Graph, colouring: Colouring, mode) -> bool:
    """True iff the colouring is proper and every required vertex is rainbow."""
    if colouring.order != graph.order or not is_proper(graph, colouring):
        return False
    masks = colouring.class_masks()
    return all(
        _is_rainbow(graph, masks, colouring.k, v)
        for v in iter_bits(required_mask(graph, mode))
    )


# ============================================================================
# Rainbow neighbourhood number
# ============================================================================

class RainbowCount(BaseModel):
    """r_χ under the canonical χ⁻-colouring plus the sweep over all χ-colourings."""
    chromatic_number: int
    canonical: int
    canonical_vertices: List[int]
    canonical_colouring: Colouring
    minimum: int
    maximum: int
    colourings_examined: int
    all_rainbow_witness: Optional[Colouring] = None


def rainbow_neighbourhood_number(graph: Graph) -> RainbowCount:
    """
    Count rainbow vertices under chromatic colourings.

    The canonical count uses the χ⁻-colouring; minimum and maximum range over
    every proper χ-colouring (one per colour permutation, which leaves the
    count unchanged).

    Raises:
        GraphError: empty graph
        ScaleLimitExceeded: order above the sweep cap
    """
    n = graph.order
    if n == 0:
        raise GraphError("rainbow neighbourhood number requires a nonempty graph")
    if n > MAX_SWEEP_ORDER:
        raise ScaleLimitExceeded("order for chromatic sweep", n, MAX_SWEEP_ORDER)

    chi = chromatic_number(graph).number
    canonical = chi_minus_colouring(graph)
    canonical_vertices = rainbow_vertices(graph, canonical)

    minimum, maximum, examined = n, 0, 0
    witness = None
    for colouring in enumerate_proper_colourings(graph, chi):
        count = len(rainbow_vertices(graph, colouring))
        examined += 1
        minimum = min(minimum, count)
        maximum = max(maximum, count)
        if count == n and witness is None:
            witness = colouring

    logger.debug(
        f"r_chi sweep n={n} chi={chi}: canonical={len(canonical_vertices)} "
        f"range={minimum}..{maximum} over {examined} colourings"
    )
    return RainbowCount(
        chromatic_number=chi,
        canonical=len(canonical_vertices),
        canonical_vertices=canonical_vertices,
        canonical_colouring=canonical,
        minimum=minimum,
        maximum=maximum,
        colourings_examined=examined,
        all_rainbow_witness=witness,
    )
