"""
Closed-form J / J* values stated for named families and operations.

Each Prediction is the claim side of a harness comparison: the value a
catalogued claim states for an instance, or that it states the instance
admits no J-colouring.
"""

import logging
from typing import Callable, List, NamedTuple, Optional

from pydantic import BaseModel

from src.colouring.base import Colouring
from src.graph.families import GraphFamily, cycle
from src.graph.notation import GraphSpec
from src.graph.operations import CombineKind, DerivativeKind, derive
from src.rainbow.neighbourhood import RainbowMode, validate_rainbow_colouring

logger = logging.getLogger(__name__)


class Prediction(BaseModel):
    """
    Stated values for one instance under one claim.

    ``admissible`` is None when the claim says nothing about admissibility;
    ``j`` / ``j_star`` are None when the claim states no value.
    """
    claim_id: str
    j: Optional[int] = None
    j_star: Optional[int] = None
    admissible: Optional[bool] = None
    note: str = ""


class KnownValue(NamedTuple):
    admissible: bool
    j: Optional[int]


Resolver = Callable[[GraphSpec], Optional[KnownValue]]


# ============================================================================
# Families
# ============================================================================

def _cycle_value(n: int) -> Optional[int]:
    if n % 3 == 0:
        return 3
    if n % 2 == 0:
        return 2
    return None


def _member_predictions(spec: GraphSpec) -> List[Prediction]:
    n = spec.n
    if spec.is_family(GraphFamily.PATH) and n >= 2:
        return [Prediction(claim_id="path-values", j=2, j_star=3, admissible=True)]
    if spec.is_family(GraphFamily.CYCLE):
        value = _cycle_value(n)
        return [Prediction(
            claim_id="cycle-values", j=value, j_star=value, admissible=value is not None,
        )]
    if spec.is_family(GraphFamily.COMPLETE) and n >= 1:
        return [Prediction(claim_id="complete-values", j=n, j_star=n, admissible=True)]
    if spec.is_family(GraphFamily.STAR):
        return [Prediction(claim_id="star-values", j=2, j_star=n + 1, admissible=True)]
    if spec.is_family(GraphFamily.NULL):
        return [Prediction(claim_id="null-convention", j=1, j_star=1, admissible=True)]
    return []


# ============================================================================
# Derivatives of paths and cycles
# ============================================================================

def middle_cycle_colouring(n: int) -> Colouring:
    """
    The colouring prescribed for M(Cₙ).

    Walks v₁, u₁, v₂, u₂, ..., v₍ₙ₋₁₎, u₍ₙ₋₁₎ cycling colours 1, 2, 3 and
    closes with v_n = 1, u_n = 3, where uᵢ is the edge-vertex of vᵢvᵢ₊₁.
    Vertices are numbered as derive(Cₙ, middle) numbers them.
    """
    if n < 3:
        raise ValueError(f"middle cycle colouring needs n >= 3, got {n}")
    edge_index = {edge: i for i, edge in enumerate(cycle(n).edges())}
    colours = [0] * (2 * n)
    step = 0
    for i in range(n - 1):
        colours[i] = step % 3 + 1
        colours[n + edge_index[(i, i + 1)]] = (step + 1) % 3 + 1
        step += 2
    colours[n - 1] = 1
    colours[n + edge_index[(0, n - 1)]] = 3
    return Colouring(colour_of=tuple(colours), k=3)


def _path_derivative(kind: DerivativeKind, n: int) -> List[Prediction]:
    if n < 2:
        return []
    if kind is DerivativeKind.LINE:
        return [Prediction(claim_id="path-line-values", j=2, j_star=3, admissible=True)]
    if kind is DerivativeKind.MIDDLE:
        if n == 2:
            return [Prediction(claim_id="path-middle-values", j=2, admissible=True)]
        return [Prediction(claim_id="path-middle-values", j_star=3, admissible=False)]
    if kind is DerivativeKind.TOTAL:
        return [Prediction(claim_id="path-total-values", j=3, j_star=3, admissible=True)]
    if kind is DerivativeKind.JUMP:
        if n == 5:
            return [Prediction(claim_id="path-jump-values", j=3, j_star=3, admissible=True)]
        if n >= 6:
            return [Prediction(claim_id="path-jump-values", j=n // 2, j_star=n // 2, admissible=True)]
        return []
    if kind is DerivativeKind.CENTRAL:
        return [Prediction(claim_id="path-central-values", j=3, j_star=3, admissible=True)]
    return []


def _cycle_derivative(kind: DerivativeKind, n: int) -> List[Prediction]:
    if kind is DerivativeKind.LINE:
        value = _cycle_value(n)
        return [Prediction(
            claim_id="cycle-line-values", j=value, j_star=value, admissible=value is not None,
        )]
    if kind is DerivativeKind.MIDDLE:
        if n % 3 == 0:
            return [Prediction(claim_id="cycle-middle-values", j=3, j_star=3, admissible=True)]
        middle = derive(cycle(n), DerivativeKind.MIDDLE)
        if validate_rainbow_colouring(middle, middle_cycle_colouring(n), RainbowMode.ALL_VERTICES):
            return [Prediction(
                claim_id="cycle-middle-values", j=3, j_star=3, admissible=True,
                note="prescribed colouring is a valid J-colouring",
            )]
        return [Prediction(
            claim_id="cycle-middle-values", admissible=False,
            note="prescribed colouring is not a valid J-colouring",
        )]
    if kind is DerivativeKind.TOTAL:
        if n % 2 == 0:
            return [Prediction(claim_id="cycle-total-values", j=4, j_star=4, admissible=True)]
        return [Prediction(claim_id="cycle-total-values", admissible=False)]
    if kind is DerivativeKind.JUMP:
        if n == 5:
            return [Prediction(claim_id="cycle-jump-values", admissible=False)]
        if n >= 6:
            return [Prediction(claim_id="cycle-jump-values", j=n // 2, j_star=n // 2, admissible=True)]
        return []
    if kind is DerivativeKind.CENTRAL:
        return [Prediction(claim_id="cycle-central-values", j=3, j_star=3, admissible=True)]
    return []


# ============================================================================
# Binary operations
# ============================================================================

def _default_resolver(spec: GraphSpec) -> Optional[KnownValue]:
    for prediction in predicted_values(spec):
        if prediction.admissible is False:
            return KnownValue(False, None)
        if prediction.j is not None:
            return KnownValue(True, prediction.j)
    return None


def _combination(spec: GraphSpec, resolve: Resolver) -> List[Prediction]:
    left, right = spec.operands
    g, h = resolve(left), resolve(right)
    if g is None or h is None:
        return []
    kind = spec.combination

    if kind is CombineKind.CARTESIAN:
        if g.admissible and h.admissible:
            return [Prediction(claim_id="cartesian-max", j=max(g.j, h.j), admissible=True)]
        return []

    if kind is CombineKind.JOIN:
        return [Prediction(claim_id="join-admissibility", admissible=g.admissible and h.admissible)]

    if kind is CombineKind.CORONA:
        if not (g.admissible and h.admissible):
            return []
        apex = left.is_family(GraphFamily.COMPLETE, 1)
        admissible = apex or g.j == h.j + 1
        predictions = [Prediction(claim_id="corona-admissibility", admissible=admissible)]
        if apex:
            predictions.append(Prediction(claim_id="corona-apex-value", j=h.j + 1, admissible=True))
        if admissible:
            predictions.append(Prediction(claim_id="corona-value", j=g.j, admissible=True))
        return predictions

    return []


# ============================================================================
# Entry points
# ============================================================================

def predicted_values(spec: GraphSpec, resolve: Optional[Resolver] = None) -> List[Prediction]:
    """
    Every stated prediction for an instance.

    Args:
        spec: Instance descriptor
        resolve: Supplies (admissible, J) of operands of binary operations;
            defaults to the operands' own stated values

    Returns:
        Possibly empty list, one Prediction per applicable claim
    """
    if spec.is_member:
        return _member_predictions(spec)
    if spec.derivative is not None:
        base = spec.operands[0]
        if base.is_family(GraphFamily.PATH):
            return _path_derivative(spec.derivative, base.n)
        if base.is_family(GraphFamily.CYCLE):
            return _cycle_derivative(spec.derivative, base.n)
        return []
    return _combination(spec, resolve or _default_resolver)


def predicted_value(spec: GraphSpec, claim_id: Optional[str] = None,
                    resolve: Optional[Resolver] = None) -> Optional[Prediction]:
    """The prediction for one claim (or the first one), None when nothing is stated."""
    for prediction in predicted_values(spec, resolve):
        if claim_id is None or prediction.claim_id == claim_id:
            return prediction
    return None
