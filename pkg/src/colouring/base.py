"""
Vertex colourings and their bookkeeping.

A Colouring maps every vertex to a colour index 1..k and uses every one of
the k colours. θ is the per-colour class size, ι(v) the colour index of v,
and ι′(v) = k − (ι(v) − 1) its index under the inverted colouring.
"""

import logging
import math
from typing import Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import ColouringError, GraphFormatError
from src.graph.core import Graph

logger = logging.getLogger(__name__)


# ============================================================================
# Colouring
# ============================================================================

class Colouring(BaseModel):
    """Total, surjective assignment of colours 1..k to vertices 0..n-1."""
    model_config = ConfigDict(frozen=True)

    colour_of: Tuple[int, ...]
    k: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_surjective(self) -> "Colouring":
        """Every colour lies in 1..k and every colour in 1..k is used."""
        if not self.colour_of:
            if self.k != 0:
                raise ValueError(f"empty colouring must have k = 0, got {self.k}")
            return self
        for v, c in enumerate(self.colour_of):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has colour {c} outside 1..{self.k}")
        missing = set(range(1, self.k + 1)) - set(self.colour_of)
        if missing:
            raise ValueError(f"colours {sorted(missing)} are never used")
        return self

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "Colouring":
        values = tuple(values)
        return cls(colour_of=values, k=max(values, default=0))

    @property
    def order(self) -> int:
        return len(self.colour_of)

    @property
    def theta(self) -> Tuple[int, ...]:
        counts = [0] * self.k
        for c in self.colour_of:
            counts[c - 1] += 1
        return tuple(counts)

    def classes(self) -> List[List[int]]:
        """Vertex lists of colour classes 1..k."""
        result: List[List[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colour_of):
            result[c - 1].append(v)
        return result

    def class_masks(self) -> List[int]:
        """Bit-set per colour, indexed by colour (index 0 unused)."""
        masks = [0] * (self.k + 1)
        for v, c in enumerate(self.colour_of):
            masks[c] |= 1 << v
        return masks


class ColourStats(BaseModel):
    """θ per colour and ι, ι′ per vertex."""
    k: int
    theta: List[int]
    iota: List[int]
    iota_prime: List[int]


# ============================================================================
# Operations
# ============================================================================

def _check_domain(graph: Graph, colouring: Colouring) -> None:
    if colouring.order != graph.order:
        raise ColouringError(
            f"colouring covers {colouring.order} vertices but the graph has {graph.order}"
        )


def is_proper(graph: Graph, colouring: Colouring) -> bool:
    """True iff every edge joins differently coloured endpoints."""
    _check_domain(graph, colouring)
    colours = colouring.colour_of
    return all(colours[u] != colours[v] for u, v in graph.edges())


def invert_colouring(colouring: Colouring) -> Colouring:
    """Colour j becomes k − (j − 1); an involution that reverses θ."""
    k = colouring.k
    return Colouring(colour_of=tuple(k + 1 - c for c in colouring.colour_of), k=k)


def colour_stats(colouring: Colouring) -> ColourStats:
    k = colouring.k
    return ColourStats(
        k=k,
        theta=list(colouring.theta),
        iota=list(colouring.colour_of),
        iota_prime=[k - (c - 1) for c in colouring.colour_of],
    )


def normalise_colouring(values: Sequence[int]) -> Colouring:
    """Relabel colours in order of first occurrence along the vertex order."""
    relabel = {}
    normalised = []
    for c in values:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        normalised.append(relabel[c])
    return Colouring(colour_of=tuple(normalised), k=len(relabel))


def enumerate_proper_colourings(graph: Graph, k: int) -> Iterator[Colouring]:
    """
    Yield every proper colouring using exactly k colours, one per colour permutation.

    Colourings are produced in first-occurrence normal form and in
    lexicographic order of their colour vectors.
    """
    n = graph.order
    if n == 0:
        if k == 0:
            yield Colouring(colour_of=(), k=0)
        return
    if not 1 <= k <= n:
        return

    adjacency = graph.adjacency
    colours = [0] * n
    class_masks = [0] * (k + 1)

    def extend(v: int, used: int) -> Iterator[Colouring]:
        if v == n:
            if used == k:
                yield Colouring(colour_of=tuple(colours), k=k)
            return
        if n - v < k - used:
            return
        for c in range(1, min(used + 1, k) + 1):
            if class_masks[c] & adjacency[v]:
                continue
            colours[v] = c
            class_masks[c] |= 1 << v
            yield from extend(v + 1, max(used, c))
            class_masks[c] &= ~(1 << v)
            colours[v] = 0

    yield from extend(0, 0)


def count_proper_colourings(graph: Graph, k: int) -> int:
    """Number of proper colourings with exactly k colours, colour names distinguished."""
    normal_forms = sum(1 for _ in enumerate_proper_colourings(graph, k))
    return normal_forms * math.factorial(k)


# ============================================================================
# Text format: "k" header, then one "v colour" line per vertex
# ============================================================================

def format_colouring(colouring: Colouring) -> str:
    lines = [str(colouring.k)]
    lines.extend(f"{v} {c}" for v, c in enumerate(colouring.colour_of))
    return "\n".join(lines) + "\n"


def parse_colouring(text: str, order: Optional[int] = None) -> Colouring:
    """
    Parse the colouring text format.

    Raises:
        GraphFormatError: malformed header or line, vertex missing or repeated
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError("malformed colouring header: empty input")
    try:
        k = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"malformed colouring header: expected 'k', got {lines[0]!r}")

    assignment = {}
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.split()
        try:
            v, c = int(parts[0]), int(parts[1])
            if len(parts) != 2:
                raise ValueError
        except (ValueError, IndexError):
            raise GraphFormatError(f"line {line_no}: malformed colouring entry {line!r}")
        if v in assignment:
            raise GraphFormatError(f"line {line_no}: vertex {v} coloured twice")
        assignment[v] = c

    n = order if order is not None else len(assignment)
    if sorted(assignment) != list(range(n)):
        raise GraphFormatError(f"colouring must assign every vertex 0..{n - 1} exactly once")
    try:
        return Colouring(colour_of=tuple(assignment[v] for v in range(n)), k=k)
    except ValueError as e:
        raise GraphFormatError(f"invalid colouring: {e}")
