"""
Rainbow bonding variables.

r⁻ₖ(G) and r⁺ₖ(G) are the fewest and the most edges whose removal leaves a
graph with J = k. They are defined only for graphs that admit a J-colouring
and for 1 <= k <= J(G).
"""

import logging
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from src.errors import ScaleLimitExceeded
from src.extremal.search import EdgeSubsetSearch, Semantics, TargetValue, removal_size_range
from src.graph.core import Edge, Graph
from src.rainbow.solver import j_number
from src.settings import DEFAULT_WORKERS, MAX_BONDING_EDGES

logger = logging.getLogger(__name__)


# ============================================================================
# Result models
# ============================================================================

class BondingResult(BaseModel):
    """Extremal removal sets for one target k."""
    k: int
    semantics: Semantics
    defined: bool = Field(True, description="False when G admits no J-colouring")
    r_minus: Optional[int] = None
    r_minus_witness: Optional[List[Edge]] = None
    r_plus: Optional[int] = None
    r_plus_witness: Optional[List[Edge]] = None

    @model_validator(mode="after")
    def check_order(self) -> "BondingResult":
        if self.r_minus is not None and self.r_plus is not None and self.r_minus > self.r_plus:
            raise ValueError(f"r_minus {self.r_minus} exceeds r_plus {self.r_plus}")
        return self


class BondingRow(BaseModel):
    """One row of a bonding profile: absolute extremes plus the iterative schedule step."""
    result: BondingResult
    step_removed: Optional[int] = None
    step_witness: Optional[List[Edge]] = None
    cumulative: Optional[int] = None

    @property
    def k(self) -> int:
        return self.result.k


class BondingProfile(BaseModel):
    order: int
    size: int
    semantics: Semantics
    j_value: Optional[int] = None
    rows: List[BondingRow] = Field(default_factory=list)

    @property
    def defined(self) -> bool:
        return self.j_value is not None

    def to_csv_rows(self) -> List[dict]:
        """Rows with fixed columns k, r_minus, r_plus, semantics, witness_edges, step_removed, cumulative."""
        rows = []
        for row in self.rows:
            result = row.result
            witness = result.r_minus_witness or []
            rows.append({
                "k": result.k,
                "r_minus": "" if result.r_minus is None else result.r_minus,
                "r_plus": "" if result.r_plus is None else result.r_plus,
                "semantics": result.semantics.value,
                "witness_edges": " ".join(f"{u}-{v}" for u, v in witness),
                "step_removed": "" if row.step_removed is None else row.step_removed,
                "cumulative": "" if row.cumulative is None else row.cumulative,
            })
        return rows


# ============================================================================
# Search entry points
# ============================================================================

def _check_target(graph: Graph, k: int) -> Optional[int]:
    if graph.size > MAX_BONDING_EDGES:
        raise ScaleLimitExceeded("edge count for subset search", graph.size, MAX_BONDING_EDGES)
    j_value = j_number(graph)
    if j_value is not None and not 1 <= k <= j_value:
        raise ValueError(f"k must lie in 1..{j_value} for this graph, got {k}")
    return j_value


def bonding_result(
    graph: Graph,
    k: int,
    semantics=Semantics.PLAIN,
    workers: int = DEFAULT_WORKERS,
    minimum: bool = True,
    maximum: bool = True,
) -> BondingResult:
    """
    Exact r⁻ₖ and/or r⁺ₖ with lexicographically least witnesses.

    Args:
        graph: Input graph (p <= MAX_BONDING_EDGES)
        k: Target J value, 1 <= k <= J(G)
        semantics: Semantics
        workers: Process count for each cardinality level
        minimum: Compute r⁻ₖ
        maximum: Compute r⁺ₖ

    Returns:
        BondingResult; defined=False when G admits no J-colouring

    Raises:
        ScaleLimitExceeded: too many edges
        ValueError: k out of range
    """
    semantics = Semantics(semantics)
    if _check_target(graph, k) is None:
        return BondingResult(k=k, semantics=semantics, defined=False)

    search = EdgeSubsetSearch(graph, TargetValue(k, semantics))
    sizes = removal_size_range(graph, k, semantics)
    result = {}
    if minimum:
        hit = search.scan(sizes, workers)
        if hit is not None:
            result.update(r_minus=len(hit), r_minus_witness=search.witness(hit))
    if maximum:
        hit = search.scan(reversed(sizes), workers)
        if hit is not None:
            result.update(r_plus=len(hit), r_plus_witness=search.witness(hit))

    logger.debug(
        f"bonding n={graph.order} p={graph.size} k={k} {semantics.value}: "
        f"r-={result.get('r_minus')} r+={result.get('r_plus')} ({search.evaluations} subsets tested)"
    )
    return BondingResult(k=k, semantics=semantics, **result)


def r_minus(graph: Graph, k: int, semantics=Semantics.PLAIN, workers: int = DEFAULT_WORKERS) -> BondingResult:
    """Fewest edges whose removal leaves J = k."""
    return bonding_result(graph, k, semantics, workers, minimum=True, maximum=False)


def r_plus(graph: Graph, k: int, semantics=Semantics.PLAIN, workers: int = DEFAULT_WORKERS) -> BondingResult:
    """Most edges whose removal leaves J = k."""
    return bonding_result(graph, k, semantics, workers, minimum=False, maximum=True)


def bonding_profile(graph: Graph, semantics=Semantics.PLAIN, workers: int = DEFAULT_WORKERS) -> BondingProfile:
    """
    Bonding table for k = J(G) down to 1.

    Besides the absolute r⁻ₖ / r⁺ₖ, each row records an iterative schedule:
    starting from G, every stage removes the fewest further edges from the
    previous stage's graph that bring J down to the row's k.
    """
    semantics = Semantics(semantics)
    if graph.size > MAX_BONDING_EDGES:
        raise ScaleLimitExceeded("edge count for subset search", graph.size, MAX_BONDING_EDGES)
    j_value = j_number(graph)
    profile = BondingProfile(order=graph.order, size=graph.size, semantics=semantics, j_value=j_value)
    if j_value is None:
        return profile

    stage: Optional[Graph] = graph
    cumulative = 0
    for k in range(j_value, 0, -1):
        result = bonding_result(graph, k, semantics, workers)
        row = BondingRow(result=result)
        if stage is not None:
            if k == j_value:
                row.step_removed, row.step_witness, row.cumulative = 0, [], 0
            else:
                step = EdgeSubsetSearch(stage, TargetValue(k, semantics))
                hit = step.scan(removal_size_range(stage, k, semantics), workers)
                if hit is None:
                    stage = None
                else:
                    removed = step.witness(hit)
                    cumulative += len(removed)
                    row.step_removed, row.step_witness, row.cumulative = len(removed), removed, cumulative
                    stage = stage.without_edges(removed)
        profile.rows.append(row)
    return profile
