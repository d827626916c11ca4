"""
Closed forms for complete graphs and explicit removal schedules.
"""

import logging
from typing import List, Optional, Sequence

from pydantic import BaseModel

from src.errors import GraphError
from src.graph.core import Edge, Graph
from src.rainbow.solver import j_number

logger = logging.getLogger(__name__)


class KnBonding(BaseModel):
    """Closed-form r⁻ₖ(Kₙ) (None where no formula is known) and r⁺ₖ(Kₙ)."""
    n: int
    k: int
    r_minus: Optional[int] = None
    r_plus: int


def kn_bonding_closed_form(n: int, k: int) -> KnBonding:
    """
    r⁻ₖ(Kₙ) = n − k for k >= ceil(n/2); r⁺ₖ(Kₙ) = (n+1−k)(n−k)/2.

    Raises:
        ValueError: n < 1 or k outside 1..n
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    r_minus = n - k if k >= (n + 1) // 2 else None
    return KnBonding(n=n, k=k, r_minus=r_minus, r_plus=(n + 1 - k) * (n - k) // 2)


# ============================================================================
# Removal schedules
# ============================================================================

class ScheduleStage(BaseModel):
    stage: int
    removed: int
    cumulative: int
    j_value: Optional[int] = None


# K₉ with vertices 0..8: split into colour pairs, then merge into the
# bipartite K₄,₅, then strip everything.
K9_REMOVAL_SCHEDULE: List[List[Edge]] = [
    [(0, 1), (2, 3), (4, 5), (6, 7)],
    [(6, 8), (7, 8)],
    [(0, 2), (0, 3), (1, 2), (1, 3)],
    [(4, 6), (4, 7), (4, 8), (5, 6), (5, 7), (5, 8)],
    [(u, v) for u in range(4) for v in range(4, 9)],
]
K9_EXPECTED_J = [5, 4, 3, 2, 1]
K9_EXPECTED_CUMULATIVE = [4, 6, 10, 16, 36]


def apply_removal_schedule(graph: Graph, stages: Sequence[Sequence[Edge]]) -> List[ScheduleStage]:
    """
    Remove each stage's edges cumulatively and record J after every stage.

    Raises:
        GraphError: a stage names an edge that is not present at that point
    """
    current = graph
    cumulative = 0
    results = []
    for index, stage in enumerate(stages, start=1):
        for u, v in stage:
            if not (0 <= u < current.order and 0 <= v < current.order) or not current.has_edge(u, v):
                raise GraphError(f"stage {index}: edge ({u}, {v}) is not present")
        current = current.without_edges(stage)
        cumulative += len(stage)
        results.append(ScheduleStage(
            stage=index, removed=len(stage), cumulative=cumulative, j_value=j_number(current),
        ))
        logger.debug(f"schedule stage {index}: cumulative {cumulative}, J = {results[-1].j_value}")
    return results
