"""
Pydantic schemas for the verification harness.

CorpusConfig is the JSON document accepted by ``verify --config``;
ClaimRecord and VerificationReport make up the emitted report.
"""

from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from src.extremal.search import Semantics
from src.graph.notation import parse_graph_spec
from src.settings import (
    DEFAULT_WORKERS,
    MAX_BONDING_EDGES,
    MAX_PROFILE_ORDER,
    MAX_SWEEP_ORDER,
    NAIVE_MAX_ORDER,
)

Verdict = Literal["confirmed", "refuted", "not-applicable"]
Value = Union[bool, int, str, None]


# ============================================================================
# Report
# ============================================================================

class ClaimRecord(BaseModel):
    """One comparison between a stated value and a computed one."""
    claim_id: str = Field(..., min_length=1)
    instance: str
    quantity: str
    predicted: Value = None
    computed: Value = None
    verdict: Verdict
    report_only: bool = False
    note: str = ""
    runtime: Optional[float] = Field(None, description="Seconds; emitted only with timings on")

    @model_validator(mode="after")
    def check_verdict(self) -> "ClaimRecord":
        """confirmed iff predicted equals computed, unless the comparison did not apply."""
        if self.verdict == "not-applicable":
            return self
        if (self.verdict == "confirmed") != (self.predicted == self.computed):
            raise ValueError(
                f"verdict {self.verdict} contradicts predicted={self.predicted!r} computed={self.computed!r}"
            )
        return self

    @property
    def is_hard_failure(self) -> bool:
        return self.verdict == "refuted" and not self.report_only

    def sort_key(self) -> Tuple[str, str, str]:
        return (self.claim_id, self.instance, self.quantity)


class ReportSummary(BaseModel):
    confirmed: int = 0
    refuted: int = 0
    report_only: int = 0
    not_applicable: int = 0
    hard_failures: int = 0


class VerificationReport(BaseModel):
    version: str
    summary: ReportSummary = Field(default_factory=ReportSummary)
    claims: List[ClaimRecord] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.summary.hard_failures == 0

    def to_json(self, timings: bool = False) -> str:
        """Deterministic JSON; runtimes are dropped unless timings are requested."""
        exclude = None if timings else {"claims": {"__all__": {"runtime"}}}
        return self.model_dump_json(indent=2, exclude=exclude)


def summarise(records: List[ClaimRecord]) -> ReportSummary:
    summary = ReportSummary()
    for record in records:
        if record.verdict == "confirmed":
            summary.confirmed += 1
        elif record.verdict == "refuted":
            summary.refuted += 1
        else:
            summary.not_applicable += 1
        if record.report_only:
            summary.report_only += 1
        if record.is_hard_failure:
            summary.hard_failures += 1
    return summary


# ============================================================================
# Corpus configuration
# ============================================================================

class CorpusConfig(BaseModel):
    """Instance ranges, seeds and caps for one harness run."""

    # Named families (inclusive ranges)
    path_range: Tuple[int, int] = (2, 10)
    cycle_range: Tuple[int, int] = (3, 12)
    complete_range: Tuple[int, int] = (1, 7)
    star_range: Tuple[int, int] = (1, 6)
    null_range: Tuple[int, int] = (0, 5)

    # Seeded random instances
    random_tree_count: int = Field(20, ge=0)
    random_tree_max_order: int = Field(12, ge=3)
    random_tree_seed: int = 2024
    random_graph_count: int = Field(200, ge=0)
    random_graph_max_order: int = Field(10, ge=1)
    random_graph_seed: int = 7

    # Derivatives of paths and cycles
    derivative_range: Tuple[int, int] = (2, 12)

    # Binary operations, as graph names
    product_pairs: List[Tuple[str, str]] = Field(default_factory=lambda: [
        ("P2", "P2"), ("P2", "P3"), ("K3", "P2"), ("K4", "P2"), ("C6", "P2"),
        ("P3", "P3"), ("P3", "P4"), ("P3", "C4"), ("P3", "K3"), ("P3", "K4"),
        ("K3", "K3"), ("K3", "P4"), ("K3", "C4"), ("K3", "K4"),
    ])
    corona_pairs: List[Tuple[str, str]] = Field(default_factory=lambda: [
        ("K1", "P2"), ("K1", "C3"), ("K1", "C6"), ("K1", "C4"), ("K1", "P3"),
        ("K3", "P2"), ("P3", "K1"), ("P2", "P2"), ("K4", "C6"),
    ])
    join_pairs: List[Tuple[str, str]] = Field(default_factory=lambda: [
        ("P2", "P3"), ("K2", "C4"), ("C6", "P2"), ("C5", "P2"), ("K1", "C5"),
    ])

    # Extremal
    kn_orders: List[int] = Field(default_factory=lambda: [2, 3, 4, 5, 6])
    kn_maximum_orders: List[int] = Field(default_factory=lambda: [2, 3, 4, 5])
    bonding_graphs: List[str] = Field(default_factory=lambda: [
        "P4", "C4", "C6", "K1,3", "K2,3", "P2 x P3", "K1 o P3",
    ])
    semantics: List[Semantics] = Field(default_factory=lambda: list(Semantics))
    repair_graphs: List[str] = Field(default_factory=lambda: ["C5", "C7", "M(P3)", "K1 + C5", "P4"])
    include_k9_schedule: bool = True

    # Caps
    max_profile_order: int = Field(MAX_PROFILE_ORDER, ge=1)
    sweep_max_order: int = Field(10, ge=1)
    naive_max_order: int = Field(NAIVE_MAX_ORDER, ge=1)
    naive_instances: Optional[int] = Field(None, ge=0)

    # Execution
    workers: int = Field(DEFAULT_WORKERS, ge=1)
    timings: bool = False
    cache_path: Optional[str] = None

    @field_validator("path_range", "cycle_range", "complete_range", "star_range", "null_range", "derivative_range")
    @classmethod
    def validate_range(cls, value: Tuple[int, int]) -> Tuple[int, int]:
        low, high = value
        if low < 0 or low > high:
            raise ValueError(f"range {value} must satisfy 0 <= low <= high")
        return value

    @field_validator("product_pairs", "corona_pairs", "join_pairs")
    @classmethod
    def validate_pair_names(cls, pairs: List[Tuple[str, str]]) -> List[Tuple[str, str]]:
        for left, right in pairs:
            parse_graph_spec(left)
            parse_graph_spec(right)
        return pairs

    @field_validator("bonding_graphs", "repair_graphs")
    @classmethod
    def validate_names(cls, names: List[str]) -> List[str]:
        for name in names:
            parse_graph_spec(name)
        return names

    @field_validator("kn_orders", "kn_maximum_orders")
    @classmethod
    def validate_kn_orders(cls, orders: List[int]) -> List[int]:
        for n in orders:
            if n < 1 or n * (n - 1) // 2 > MAX_BONDING_EDGES:
                raise ValueError(
                    f"K{n} has {n * (n - 1) // 2} edges; subset search is capped at {MAX_BONDING_EDGES}"
                )
        return orders

    @model_validator(mode="after")
    def validate_caps(self) -> "CorpusConfig":
        """Every cap must sit inside the solvers' own refusal bounds."""
        if self.max_profile_order > MAX_PROFILE_ORDER:
            raise ValueError(f"max_profile_order {self.max_profile_order} exceeds {MAX_PROFILE_ORDER}")
        if self.sweep_max_order > MAX_SWEEP_ORDER:
            raise ValueError(f"sweep_max_order {self.sweep_max_order} exceeds {MAX_SWEEP_ORDER}")
        if self.naive_max_order > NAIVE_MAX_ORDER:
            raise ValueError(f"naive_max_order {self.naive_max_order} exceeds {NAIVE_MAX_ORDER}")
        if self.random_tree_max_order > self.max_profile_order:
            raise ValueError("random_tree_max_order exceeds max_profile_order")
        if self.random_graph_max_order > self.max_profile_order:
            raise ValueError("random_graph_max_order exceeds max_profile_order")
        return self

    @classmethod
    def from_file(cls, path: str) -> "CorpusConfig":
        with open(path, "r", encoding="utf-8") as f:
            return cls.model_validate_json(f.read())
