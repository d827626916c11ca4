"""
Exception types shared across jcolour.

The CLI maps these onto exit codes: input problems are usage errors (2),
cap violations are scale refusals (3).
"""


class GraphError(ValueError):
    """Invalid graph construction (index out of range, self-loop, ...)."""


class GraphFormatError(GraphError):
    """Text that does not decode to a graph or colouring."""


class NotATreeError(GraphError):
    """A tree was required."""


class ColouringError(ValueError):
    """Colouring does not fit the graph, or is improper where it must not be."""


class ScaleLimitExceeded(RuntimeError):
    """An exhaustive computation was refused because it exceeds a configured cap."""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the configured limit {limit}")


class HarnessError(RuntimeError):
    """The verification harness failed its own self-checks."""
