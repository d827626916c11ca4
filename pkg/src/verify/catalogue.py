"""
Claim catalogue.

Every catalogued claim is a function from a ClaimContext to the
ClaimRecords it produces. Claims in REPORT_ONLY (and individual instances
outside a claim's stated range) are recorded with report_only set: their
refutations document a discrepancy without failing the run.
"""

import logging
from typing import Callable, Collection, Dict, List, Optional, Tuple

from src.colouring.base import Colouring
from src.colouring.chromatic import chromatic_number
from src.db.cache import ProfileCache
from src.errors import HarnessError
from src.extremal.bonding import bonding_profile, bonding_result, r_minus, r_plus
from src.extremal.closed_forms import (
    K9_EXPECTED_CUMULATIVE,
    K9_EXPECTED_J,
    K9_REMOVAL_SCHEDULE,
    apply_removal_schedule,
    kn_bonding_closed_form,
)
from src.extremal.repair import minimal_repair
from src.extremal.search import Semantics
from src.graph.core import Graph
from src.graph.families import GraphFamily
from src.graph.notation import GraphSpec
from src.graph.operations import CombineKind, swap_cartesian_index
from src.rainbow.neighbourhood import RainbowMode, rainbow_neighbourhood_number, validate_rainbow_colouring
from src.rainbow.solver import JProfile, certified_j_number, j_profile, naive_profile
from src.rainbow.trees import tree_jstar_colouring
from src.settings import MAX_BONDING_EDGES
from src.verify.corpus import (
    derivative_specs,
    family_specs,
    general_specs,
    named_specs,
    pair_specs,
    random_tree_specs,
)
from src.verify.predictions import KnownValue, Prediction, predicted_values
from src.verify.schemas import ClaimRecord, CorpusConfig, Value

logger = logging.getLogger(__name__)

INADMISSIBLE = "inadmissible"

CLAIM_IDS: Tuple[str, ...] = (
    "null-convention",
    "chi-lower-bound",
    "min-degree-upper-bound",
    "j-implies-jstar",
    "pendant-free-equality",
    "jstar-max-degree-bound",
    "jstar-gap-needs-pendant",
    "tree-gap",
    "tree-construction",
    "star-values",
    "rainbow-number-characterisation",
    "chi-minus-characterisation",
    "path-values",
    "cycle-values",
    "complete-values",
    "path-line-values",
    "path-middle-values",
    "path-total-values",
    "path-jump-values",
    "path-central-values",
    "cycle-line-values",
    "cycle-middle-values",
    "cycle-total-values",
    "cycle-jump-values",
    "cycle-central-values",
    "corona-admissibility",
    "corona-apex-value",
    "corona-value",
    "join-admissibility",
    "cartesian-max",
    "cartesian-commutes",
    "kn-minimum-removal",
    "kn-maximum-removal",
    "single-colour-removal",
    "bonding-equality-iff-two",
    "repair-bound",
    "k9-removal-schedule",
    "solver-consistency",
)

REPORT_ONLY = frozenset({
    "chi-minus-characterisation",
    "path-jump-values",
    "path-central-values",
    "cycle-middle-values",
    "cycle-total-values",
    "cycle-jump-values",
    "cycle-central-values",
    "kn-maximum-removal",
    "bonding-equality-iff-two",
    "k9-removal-schedule",
})


# ============================================================================
# Records
# ============================================================================

def render(value: Optional[int]) -> Value:
    """J-style value for a report: None becomes "inadmissible"."""
    return INADMISSIBLE if value is None else value


def _notes(*notes: str) -> str:
    return "; ".join(note for note in notes if note)


def compare(
    claim_id: str,
    instance: str,
    quantity: str,
    predicted: Value,
    computed: Value,
    report_only: bool = False,
    note: str = "",
) -> ClaimRecord:
    verdict = "confirmed" if predicted == computed else "refuted"
    return ClaimRecord(
        claim_id=claim_id,
        instance=instance,
        quantity=quantity,
        predicted=predicted,
        computed=computed,
        verdict=verdict,
        report_only=report_only or claim_id in REPORT_ONLY,
        note=note,
    )


def not_applicable(claim_id: str, instance: str, quantity: str, note: str) -> ClaimRecord:
    return ClaimRecord(
        claim_id=claim_id,
        instance=instance,
        quantity=quantity,
        verdict="not-applicable",
        report_only=claim_id in REPORT_ONLY,
        note=note,
    )


# ============================================================================
# Context
# ============================================================================

class ClaimContext:
    """
    Shared state for evaluating claims: memoised graphs and J-profiles.

    Args:
        config: Corpus configuration
        cache: Optional persistent profile cache
        search_workers: Worker count handed to edge-subset searches
    """

    def __init__(self, config: CorpusConfig, cache: Optional[ProfileCache] = None, search_workers: int = 1):
        self.config = config
        self.cache = cache
        self.search_workers = search_workers
        self._graphs: Dict[str, Graph] = {}
        self._profiles: Dict[Tuple[str, RainbowMode], JProfile] = {}
        self._general: Optional[List[GraphSpec]] = None

    def graph(self, spec: GraphSpec) -> Graph:
        key = spec.label()
        if key not in self._graphs:
            self._graphs[key] = spec.build()
        return self._graphs[key]

    def too_large(self, spec: GraphSpec) -> str:
        return f"order {self.graph(spec).order} exceeds the profile cap {self.config.max_profile_order}"

    def profile(self, spec: GraphSpec, mode=RainbowMode.ALL_VERTICES) -> Optional[JProfile]:
        """J-profile of an instance, or None above the profile cap."""
        mode = RainbowMode(mode)
        graph = self.graph(spec)
        cap = self.config.max_profile_order
        if graph.order > cap:
            return None
        key = (spec.label(), mode)
        if key not in self._profiles:
            if self.cache is not None:
                self._profiles[key] = self.cache.get_or_compute(graph, mode, max_order=cap)
            else:
                self._profiles[key] = j_profile(graph, mode, max_order=cap)
        return self._profiles[key]

    def known(self, spec: GraphSpec) -> Optional[KnownValue]:
        """Computed (admissible, J) of an operand, used to instantiate operation claims."""
        profile = self.profile(spec)
        if profile is None:
            return None
        return KnownValue(profile.admissible, profile.j_value)

    def settle_j(self, spec: GraphSpec) -> Optional[Tuple[Optional[int], str]]:
        """
        J of an instance with a note on how it was settled.

        Coronas above the profile cap are settled by the constructed
        colouring when it meets the δ+1 bound.
        """
        profile = self.profile(spec)
        if profile is not None:
            return profile.j_value, ""
        if spec.combination is CombineKind.CORONA:
            witness = self.corona_witness(spec)
            if witness is not None:
                certified = certified_j_number(self.graph(spec), witness)
                if certified is not None:
                    return certified, "certified by a constructed colouring meeting the degree bound"
        return None

    def corona_witness(self, spec: GraphSpec) -> Optional[Colouring]:
        """
        Colour G∘H from J-colourings of G and H.

        The copy of H at a vertex of colour i uses H's colours shifted past
        i; valid whenever J(H) + 1 >= J(G).
        """
        left, right = spec.operands
        g, h = self.profile(left), self.profile(right)
        if g is None or h is None or not (g.admissible and h.admissible):
            return None
        if h.j_value + 1 < g.j_value:
            return None
        g_colours = g.witnesses[g.j_value].colour_of
        h_colours = h.witnesses[h.j_value].colour_of
        ng, nh = len(g_colours), len(h_colours)
        colours = list(g_colours)
        for v in range(ng):
            i = g_colours[v]
            colours.extend(c if c < i else c + 1 for c in h_colours)
        witness = Colouring(colour_of=tuple(colours), k=max(g.j_value, h.j_value + 1))
        if not validate_rainbow_colouring(self.graph(spec), witness, RainbowMode.ALL_VERTICES):
            return None
        return witness

    def general(self) -> List[GraphSpec]:
        """Families, random trees and random graphs for the universal claims."""
        if self._general is None:
            self._general = general_specs(self.config)
        return self._general


ClaimEvaluator = Callable[[ClaimContext], List[ClaimRecord]]
CATALOGUE: Dict[str, ClaimEvaluator] = {}


def claim(claim_id: str):
    """Register an evaluator under a catalogued claim id."""
    if claim_id not in CLAIM_IDS:
        raise HarnessError(f"claim id {claim_id!r} is not catalogued")

    def decorator(func: ClaimEvaluator) -> ClaimEvaluator:
        if claim_id in CATALOGUE:
            raise HarnessError(f"claim id {claim_id!r} registered twice")
        CATALOGUE[claim_id] = func
        return func
    return decorator


def evaluate_claim(claim_id: str, ctx: ClaimContext) -> List[ClaimRecord]:
    if claim_id not in CATALOGUE:
        raise HarnessError(f"no evaluator registered for {claim_id!r}")
    return CATALOGUE[claim_id](ctx)


# ============================================================================
# Stated values
# ============================================================================

ReportOnlyRule = Callable[[GraphSpec, Prediction], Collection[str]]


def _no_exceptions(spec: GraphSpec, prediction: Prediction) -> Collection[str]:
    return ()


def prediction_records(
    ctx: ClaimContext,
    spec: GraphSpec,
    prediction: Prediction,
    report_only_quantities: Collection[str] = (),
) -> List[ClaimRecord]:
    """Compare one Prediction with the solvers: a J (or admissibility) record and a J* record."""
    claim_id = prediction.claim_id
    instance = spec.label()
    records = []

    if prediction.j is not None or prediction.admissible is not None:
        if prediction.j is not None:
            quantity, predicted = "J", prediction.j
        elif prediction.admissible is False:
            quantity, predicted = "J", INADMISSIBLE
        else:
            quantity, predicted = "admits J", True
        settled = ctx.settle_j(spec)
        if settled is None:
            records.append(not_applicable(claim_id, instance, quantity, ctx.too_large(spec)))
        else:
            value, how = settled
            computed = (value is not None) if quantity == "admits J" else render(value)
            records.append(compare(
                claim_id, instance, quantity, predicted, computed,
                report_only=quantity in report_only_quantities,
                note=_notes(prediction.note, how),
            ))

    if prediction.j_star is not None:
        profile = ctx.profile(spec, RainbowMode.INTERNAL_ONLY)
        if profile is None:
            records.append(not_applicable(claim_id, instance, "J*", ctx.too_large(spec)))
        else:
            records.append(compare(
                claim_id, instance, "J*", prediction.j_star, render(profile.j_value),
                report_only="J*" in report_only_quantities,
                note=prediction.note,
            ))
    return records


def _prediction_claim(
    claim_id: str,
    corpus: Callable[[CorpusConfig], List[GraphSpec]],
    report_only: ReportOnlyRule = _no_exceptions,
) -> ClaimEvaluator:
    @claim(claim_id)
    def evaluate(ctx: ClaimContext) -> List[ClaimRecord]:
        records = []
        for spec in corpus(ctx.config):
            for prediction in predicted_values(spec, ctx.known):
                if prediction.claim_id == claim_id:
                    records += prediction_records(ctx, spec, prediction, report_only(spec, prediction))
        return records
    evaluate.__name__ = claim_id.replace("-", "_")
    return evaluate


def _path_member_exceptions(spec: GraphSpec, prediction: Prediction) -> Collection[str]:
    # J*(P₂) = 2: the stated 3 applies from n = 3
    return {"J*"} if spec.n == 2 else ()


def _path_line_exceptions(spec: GraphSpec, prediction: Prediction) -> Collection[str]:
    # L(P₂) = K₁ and L(P₃) = P₂
    n = spec.operands[0].n
    if n == 2:
        return {"J", "J*"}
    return {"J*"} if n == 3 else ()


def _inadmissible_predicted(spec: GraphSpec, prediction: Prediction) -> Collection[str]:
    return {"J"} if prediction.admissible is False else ()


def _apex_exceptions(spec: GraphSpec, prediction: Prediction) -> Collection[str]:
    return {"J"} if spec.operands[0].is_family(GraphFamily.COMPLETE, 1) else ()


# Exhaustive search gives J(P₃ x C₄) = 4: every vertex has degree at least 3
# and a rainbow 4-colouring exists, above max(J(P₃), J(C₄)) = 2.
_CARTESIAN_COUNTEREXAMPLES = frozenset({"P3 x C4", "C4 x P3"})


def _cartesian_exceptions(spec: GraphSpec, prediction: Prediction) -> Collection[str]:
    return {"J"} if spec.label() in _CARTESIAN_COUNTEREXAMPLES else ()


def _corona_pairs(config: CorpusConfig) -> List[GraphSpec]:
    return pair_specs(config.corona_pairs, CombineKind.CORONA)


def _join_pairs(config: CorpusConfig) -> List[GraphSpec]:
    return pair_specs(config.join_pairs, CombineKind.JOIN)


def _product_pairs(config: CorpusConfig) -> List[GraphSpec]:
    return pair_specs(config.product_pairs, CombineKind.CARTESIAN)


_prediction_claim("null-convention", family_specs)
_prediction_claim("star-values", family_specs)
_prediction_claim("path-values", family_specs, _path_member_exceptions)
_prediction_claim("cycle-values", family_specs)
_prediction_claim("complete-values", family_specs)

_prediction_claim("path-line-values", derivative_specs, _path_line_exceptions)
_prediction_claim("path-middle-values", derivative_specs)
_prediction_claim("path-total-values", derivative_specs)
_prediction_claim("path-jump-values", derivative_specs)
_prediction_claim("path-central-values", derivative_specs)
_prediction_claim("cycle-line-values", derivative_specs)
_prediction_claim("cycle-middle-values", derivative_specs)
_prediction_claim("cycle-total-values", derivative_specs)
_prediction_claim("cycle-jump-values", derivative_specs)
_prediction_claim("cycle-central-values", derivative_specs)

_prediction_claim("corona-admissibility", _corona_pairs, _inadmissible_predicted)
_prediction_claim("corona-apex-value", _corona_pairs)
_prediction_claim("corona-value", _corona_pairs, _apex_exceptions)
_prediction_claim("join-admissibility", _join_pairs, _inadmissible_predicted)
_prediction_claim("cartesian-max", _product_pairs, _cartesian_exceptions)


@claim("cartesian-commutes")
def cartesian_commutes(ctx: ClaimContext) -> List[ClaimRecord]:
    """Swapping the factors maps every edge of G x H onto an edge of H x G."""
    records = []
    for spec in _product_pairs(ctx.config):
        left, right = spec.operands
        ng, nh = ctx.graph(left).order, ctx.graph(right).order
        product = ctx.graph(spec)
        swapped = ctx.graph(right.combined(left, CombineKind.CARTESIAN))
        preserved = product.size == swapped.size and all(
            swapped.has_edge(swap_cartesian_index(u, ng, nh), swap_cartesian_index(v, ng, nh))
            for u, v in product.edges()
        )
        records.append(compare("cartesian-commutes", spec.label(), "swap preserves edges", True, preserved))
    return records


# ============================================================================
# Universal statements over the general corpus
# ============================================================================

def _both_profiles(ctx: ClaimContext, spec: GraphSpec) -> Optional[Tuple[JProfile, JProfile]]:
    j = ctx.profile(spec, RainbowMode.ALL_VERTICES)
    if j is None:
        return None
    return j, ctx.profile(spec, RainbowMode.INTERNAL_ONLY)


@claim("chi-lower-bound")
def chi_lower_bound(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in ctx.general():
        profile = ctx.profile(spec)
        if profile is None:
            records.append(not_applicable("chi-lower-bound", spec.label(), "chi <= J", ctx.too_large(spec)))
            continue
        if not profile.admissible:
            continue
        chi = chromatic_number(ctx.graph(spec)).number
        records.append(compare(
            "chi-lower-bound", spec.label(), "chi <= J", True, chi <= profile.j_value,
            note=f"chi={chi}, J={profile.j_value}",
        ))
    return records


@claim("min-degree-upper-bound")
def min_degree_upper_bound(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in ctx.general():
        graph = ctx.graph(spec)
        if not graph.is_connected():
            continue
        profile = ctx.profile(spec)
        if profile is None:
            records.append(not_applicable("min-degree-upper-bound", spec.label(), "J <= delta+1", ctx.too_large(spec)))
            continue
        if not profile.admissible:
            continue
        bound = graph.min_degree + 1
        records.append(compare(
            "min-degree-upper-bound", spec.label(), "J <= delta+1", True, profile.j_value <= bound,
            note=f"J={profile.j_value}, delta+1={bound}",
        ))
    return records


@claim("j-implies-jstar")
def j_implies_jstar(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in ctx.general():
        profiles = _both_profiles(ctx, spec)
        if profiles is None:
            records.append(not_applicable("j-implies-jstar", spec.label(), "admits J*", ctx.too_large(spec)))
            continue
        j, j_star = profiles
        if not j.admissible:
            continue
        records.append(compare("j-implies-jstar", spec.label(), "admits J*", True, j_star.admissible))
        if j_star.admissible:
            records.append(compare(
                "j-implies-jstar", spec.label(), "J <= J*", True, j.j_value <= j_star.j_value,
                note=f"J={j.j_value}, J*={j_star.j_value}",
            ))
    return records


@claim("pendant-free-equality")
def pendant_free_equality(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in ctx.general():
        if ctx.graph(spec).min_degree < 2:
            continue
        profiles = _both_profiles(ctx, spec)
        if profiles is None:
            records.append(not_applicable("pendant-free-equality", spec.label(), "J*", ctx.too_large(spec)))
            continue
        j, j_star = profiles
        if not j.admissible:
            continue
        records.append(compare("pendant-free-equality", spec.label(), "J*", j.j_value, render(j_star.j_value)))
    return records


@claim("jstar-max-degree-bound")
def jstar_max_degree_bound(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in ctx.general():
        graph = ctx.graph(spec)
        if graph.order == 0:
            continue
        profile = ctx.profile(spec, RainbowMode.INTERNAL_ONLY)
        if profile is None:
            records.append(not_applicable("jstar-max-degree-bound", spec.label(), "J* <= Delta+1", ctx.too_large(spec)))
            continue
        if not profile.admissible:
            continue
        bound = graph.max_degree + 1
        internal = graph.max_degree >= 2
        records.append(compare(
            "jstar-max-degree-bound", spec.label(), "J* <= Delta+1", True, profile.j_value <= bound,
            report_only=not internal,
            note=f"J*={profile.j_value}, Delta+1={bound}" + ("" if internal else ", no internal vertex"),
        ))
    return records


@claim("jstar-gap-needs-pendant")
def jstar_gap_needs_pendant(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in ctx.general():
        profiles = _both_profiles(ctx, spec)
        if profiles is None:
            records.append(not_applicable("jstar-gap-needs-pendant", spec.label(), "has pendant vertex", ctx.too_large(spec)))
            continue
        j, j_star = profiles
        if not (j.admissible and j_star.admissible) or j.j_value >= j_star.j_value:
            continue
        pendant = 1 in ctx.graph(spec).degrees()
        records.append(compare(
            "jstar-gap-needs-pendant", spec.label(), "has pendant vertex", True, pendant,
            note=f"J={j.j_value}, J*={j_star.j_value}",
        ))
    return records


@claim("rainbow-number-characterisation")
def rainbow_number_characterisation(ctx: ClaimContext) -> List[ClaimRecord]:
    """The "if" direction is hard; graphs whose χ-colourings all miss a vertex are report-only."""
    return _chromatic_sweep_records(ctx, "rainbow-number-characterisation", canonical_only=False)


@claim("chi-minus-characterisation")
def chi_minus_characterisation(ctx: ClaimContext) -> List[ClaimRecord]:
    return _chromatic_sweep_records(ctx, "chi-minus-characterisation", canonical_only=True)


def _chromatic_sweep_records(ctx: ClaimContext, claim_id: str, canonical_only: bool) -> List[ClaimRecord]:
    records = []
    for spec in ctx.general():
        graph = ctx.graph(spec)
        if graph.order == 0:
            continue
        if graph.order > ctx.config.sweep_max_order:
            records.append(not_applicable(
                claim_id, spec.label(), "admits J",
                f"order {graph.order} exceeds the sweep cap {ctx.config.sweep_max_order}",
            ))
            continue
        profile = ctx.profile(spec)
        if profile is None:
            records.append(not_applicable(claim_id, spec.label(), "admits J", ctx.too_large(spec)))
            continue
        count = rainbow_neighbourhood_number(graph)
        if canonical_only:
            all_rainbow = count.canonical == graph.order
            note = f"{count.canonical} of {graph.order} vertices rainbow under the chi-minus colouring"
        else:
            all_rainbow = count.maximum == graph.order
            note = f"r_chi ranges {count.minimum}..{count.maximum} over {count.colourings_examined} colourings"
        records.append(compare(
            claim_id, spec.label(), "admits J", all_rainbow, profile.admissible,
            report_only=not all_rainbow, note=note,
        ))
    return records


# ============================================================================
# Trees
# ============================================================================

def _tree_specs(config: CorpusConfig) -> List[GraphSpec]:
    paths = [spec for spec in family_specs(config) if spec.is_family(GraphFamily.PATH) and spec.n >= 2]
    return paths + random_tree_specs(config)


@claim("tree-gap")
def tree_gap(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in _tree_specs(ctx.config):
        profiles = _both_profiles(ctx, spec)
        if profiles is None:
            records.append(not_applicable("tree-gap", spec.label(), "J < J*", ctx.too_large(spec)))
            continue
        j, j_star = profiles
        order = ctx.graph(spec).order
        records.append(compare(
            "tree-gap", spec.label(), "J < J*", True,
            j.admissible and j_star.admissible and j.j_value < j_star.j_value,
            report_only=order < 3,
            note=f"J={render(j.j_value)}, J*={render(j_star.j_value)}",
        ))
    return records


@claim("tree-construction")
def tree_construction(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in _tree_specs(ctx.config):
        graph = ctx.graph(spec)
        if graph.order < 3:
            continue
        colouring = tree_jstar_colouring(graph)
        valid = colouring.k == 3 and validate_rainbow_colouring(graph, colouring, RainbowMode.INTERNAL_ONLY)
        records.append(compare(
            "tree-construction", spec.label(), "valid 3-colour J*-colouring", True, valid,
        ))
        profile = ctx.profile(spec, RainbowMode.INTERNAL_ONLY)
        if profile is not None:
            records.append(compare(
                "tree-construction", spec.label(), "J*", 3, render(profile.j_value),
                report_only=True, note="the construction bounds J* from below only",
            ))
    return records


# ============================================================================
# Extremal
# ============================================================================

def _bonding_too_large(graph: Graph) -> Optional[str]:
    if graph.size > MAX_BONDING_EDGES:
        return f"{graph.size} edges exceed the subset-search cap {MAX_BONDING_EDGES}"
    return None


def _complete(n: int) -> GraphSpec:
    return GraphSpec.member(GraphFamily.COMPLETE, n)


@claim("kn-minimum-removal")
def kn_minimum_removal(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for n in ctx.config.kn_orders:
        spec = _complete(n)
        graph = ctx.graph(spec)
        for semantics in ctx.config.semantics:
            for k in range((n + 1) // 2, n + 1):
                stated = kn_bonding_closed_form(n, k).r_minus
                result = r_minus(graph, k, semantics, ctx.search_workers)
                records.append(compare(
                    "kn-minimum-removal", spec.label(), f"r_minus k={k} {semantics.value}",
                    stated, result.r_minus,
                ))
    return records


@claim("kn-maximum-removal")
def kn_maximum_removal(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for n in ctx.config.kn_maximum_orders:
        spec = _complete(n)
        graph = ctx.graph(spec)
        for semantics in ctx.config.semantics:
            for k in range(1, n + 1):
                stated = kn_bonding_closed_form(n, k).r_plus
                result = r_plus(graph, k, semantics, ctx.search_workers)
                witness = " ".join(f"{u}-{v}" for u, v in result.r_plus_witness or [])
                records.append(compare(
                    "kn-maximum-removal", spec.label(), f"r_plus k={k} {semantics.value}",
                    stated, result.r_plus, note=f"witness {witness}" if witness else "",
                ))
    return records


def _bonding_specs(config: CorpusConfig) -> List[GraphSpec]:
    return named_specs(config.bonding_graphs)


@claim("single-colour-removal")
def single_colour_removal(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    specs = _bonding_specs(ctx.config) + [_complete(n) for n in ctx.config.kn_orders]
    for spec in specs:
        graph = ctx.graph(spec)
        refusal = _bonding_too_large(graph)
        profile = ctx.profile(spec)
        if refusal is None and profile is None:
            refusal = ctx.too_large(spec)
        if refusal is not None:
            records.append(not_applicable("single-colour-removal", spec.label(), "r k=1", refusal))
            continue
        if not profile.admissible:
            continue
        result = bonding_result(graph, 1, Semantics.PLAIN, ctx.search_workers)
        records.append(compare("single-colour-removal", spec.label(), "r_minus k=1", graph.size, result.r_minus))
        records.append(compare("single-colour-removal", spec.label(), "r_plus k=1", graph.size, result.r_plus))
    return records


@claim("bonding-equality-iff-two")
def bonding_equality_iff_two(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in _bonding_specs(ctx.config):
        graph = ctx.graph(spec)
        refusal = _bonding_too_large(graph)
        if refusal is not None:
            records.append(not_applicable("bonding-equality-iff-two", spec.label(), "r_minus = r_plus", refusal))
            continue
        for semantics in ctx.config.semantics:
            profile = bonding_profile(graph, semantics, ctx.search_workers)
            if not profile.defined:
                records.append(not_applicable(
                    "bonding-equality-iff-two", spec.label(), f"r_minus = r_plus {semantics.value}",
                    "graph admits no J-colouring",
                ))
                continue
            for row in profile.rows:
                result = row.result
                if result.r_minus is None or result.r_plus is None:
                    computed: Value = "unreachable"
                else:
                    computed = result.r_minus == result.r_plus
                records.append(compare(
                    "bonding-equality-iff-two", spec.label(), f"r_minus = r_plus k={row.k} {semantics.value}",
                    profile.j_value == 2, computed,
                    note=f"J={profile.j_value}, r_minus={_extreme(result.r_minus)}, "
                         f"r_plus={_extreme(result.r_plus)}",
                ))
    return records


def _extreme(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


@claim("repair-bound")
def repair_bound(ctx: ClaimContext) -> List[ClaimRecord]:
    records = []
    for spec in named_specs(ctx.config.repair_graphs):
        graph = ctx.graph(spec)
        refusal = _bonding_too_large(graph)
        if refusal is not None:
            records.append(not_applicable("repair-bound", spec.label(), "repair size", refusal))
            continue
        repair = minimal_repair(graph, ctx.search_workers)
        note = f"removed {' '.join(f'{u}-{v}' for u, v in repair.edges) or 'nothing'}, J after repair = {repair.repaired_j}"
        if repair.already_admissible:
            records.append(compare("repair-bound", spec.label(), "repair size", 0, repair.size, note=note))
        elif repair.spanning_tree_bound is not None:
            records.append(compare(
                "repair-bound", spec.label(), "repair size <= p-(n-1)", True,
                repair.size <= repair.spanning_tree_bound,
                note=f"{note}, bound {repair.spanning_tree_bound}",
            ))
        else:
            records.append(compare("repair-bound", spec.label(), "admits J after repair", True, True, note=note))
    return records


@claim("k9-removal-schedule")
def k9_removal_schedule(ctx: ClaimContext) -> List[ClaimRecord]:
    spec = _complete(9)
    if not ctx.config.include_k9_schedule:
        return [not_applicable("k9-removal-schedule", spec.label(), "schedule", "disabled by configuration")]
    records = []
    stages = apply_removal_schedule(ctx.graph(spec), K9_REMOVAL_SCHEDULE)
    for stage, expected_j, expected_total in zip(stages, K9_EXPECTED_J, K9_EXPECTED_CUMULATIVE):
        records.append(compare(
            "k9-removal-schedule", spec.label(), f"J after stage {stage.stage}", expected_j, render(stage.j_value),
        ))
        records.append(compare(
            "k9-removal-schedule", spec.label(), f"edges removed after stage {stage.stage}",
            expected_total, stage.cumulative,
        ))
    return records


# ============================================================================
# Solver oracle
# ============================================================================

def _feasible_text(feasible: List[int]) -> str:
    return " ".join(str(k) for k in feasible) or "none"


@claim("solver-consistency")
def solver_consistency(ctx: ClaimContext) -> List[ClaimRecord]:
    """The pruned solver and the plain enumerator agree on every feasible k."""
    records = []
    small = [spec for spec in ctx.general() if ctx.graph(spec).order <= ctx.config.naive_max_order]
    if ctx.config.naive_instances is not None:
        small = small[:ctx.config.naive_instances]
    for spec in small:
        graph = ctx.graph(spec)
        for mode in RainbowMode:
            profile = ctx.profile(spec, mode)
            if profile is None:
                continue
            records.append(compare(
                "solver-consistency", spec.label(), f"feasible k {mode.value}",
                _feasible_text(naive_profile(graph, mode)), _feasible_text(profile.feasible_k),
            ))
    return records
