"""
Unit tests for the extremal edge-removal searches.

Tests cover:
- J-value predicates under both connectivity semantics
- r⁻ / r⁺ with lexicographically least witnesses
- Bonding profiles and minimal repair
- Closed forms for complete graphs and the K9 removal schedule
"""

import pytest

from src.errors import GraphError, ScaleLimitExceeded
from src.extremal import (
    K9_EXPECTED_CUMULATIVE,
    K9_EXPECTED_J,
    K9_REMOVAL_SCHEDULE,
    Semantics,
    apply_removal_schedule,
    bonding_profile,
    bonding_result,
    has_j_value,
    kn_bonding_closed_form,
    minimal_repair,
    r_minus,
    r_plus,
    removal_size_range,
    repair_profile,
)
from src.extremal.search import Admissible, EdgeSubsetSearch, TargetValue
from src.graph import build_graph
from src.graph.families import complete, cycle, null, path


class TestPredicates:
    """Tests for has_j_value and the subset search."""

    def test_edgeless_only_for_one(self):
        assert has_j_value(null(3), 1)
        assert has_j_value(null(0), 1)
        assert not has_j_value(path(3), 1)
        assert not has_j_value(null(3), 2)

    def test_values(self):
        assert has_j_value(cycle(4), 2)
        assert has_j_value(cycle(6), 3)
        assert not has_j_value(cycle(6), 2)
        assert not has_j_value(complete(4), 2)

    def test_connectivity_semantics(self):
        matching = build_graph(4, [(0, 1), (2, 3)])
        assert has_j_value(matching, 2, Semantics.PLAIN)
        assert not has_j_value(matching, 2, Semantics.CONNECTED_FOR_K_GE_2)
        # k = 1 never asks for connectivity
        assert has_j_value(null(4), 1, "connected_for_k_ge_2")

    def test_removal_size_range(self):
        assert removal_size_range(complete(4), 1, Semantics.PLAIN) == range(6, 7)
        assert removal_size_range(complete(4), 2, Semantics.PLAIN) == range(0, 5)
        assert removal_size_range(complete(4), 2, Semantics.CONNECTED_FOR_K_GE_2) == range(0, 4)

    def test_search_memoises(self):
        search = EdgeSubsetSearch(cycle(5), Admissible())
        assert search.first_at_size(1) == (0,)
        evaluations = search.evaluations
        assert search.first_at_size(1) == (0,)
        assert search.evaluations == evaluations

    def test_search_edge_cap(self):
        with pytest.raises(ScaleLimitExceeded):
            EdgeSubsetSearch(complete(8), TargetValue(2))


class TestBonding:
    """Tests for r⁻ and r⁺."""

    def test_k4_minimum_removal(self):
        result = r_minus(complete(4), 3)
        assert result.r_minus == 1
        assert result.r_minus_witness == [(0, 1)]
        assert result.r_plus is None

    def test_k4_two_colours(self):
        result = bonding_result(complete(4), 2)
        assert result.r_minus == 2
        # a perfect matching is left under plain semantics
        assert result.r_plus == 4

    def test_k4_two_colours_connected(self):
        result = r_plus(complete(4), 2, Semantics.CONNECTED_FOR_K_GE_2)
        assert result.r_plus == 3

    def test_strip_everything(self):
        result = bonding_result(complete(4), 1)
        assert result.r_minus == result.r_plus == 6

    def test_k_equal_to_j_needs_nothing(self):
        result = bonding_result(cycle(6), 3)
        assert result.r_minus == 0
        assert result.r_minus_witness == []

    def test_undefined_for_inadmissible(self):
        result = bonding_result(cycle(5), 2)
        assert not result.defined
        assert result.r_minus is None

    def test_k_out_of_range(self):
        with pytest.raises(ValueError, match="k must lie"):
            bonding_result(complete(4), 5)

    def test_edge_cap(self):
        with pytest.raises(ScaleLimitExceeded):
            bonding_result(complete(8), 3)

    def test_parallel_matches_serial(self):
        serial = bonding_result(complete(4), 2, workers=1)
        parallel = bonding_result(complete(4), 2, workers=2)
        assert parallel == serial


class TestBondingProfile:
    """Tests for bonding_profile."""

    def test_path(self):
        profile = bonding_profile(path(3))
        assert profile.j_value == 2
        assert [row.k for row in profile.rows] == [2, 1]
        top, bottom = profile.rows
        assert (top.result.r_minus, top.result.r_plus) == (0, 0)
        assert top.cumulative == 0
        assert bottom.step_removed == 2
        assert bottom.cumulative == 2

    def test_csv_rows(self):
        rows = bonding_profile(path(3)).to_csv_rows()
        assert rows[0]["k"] == 2
        assert rows[1]["witness_edges"] == "0-1 1-2"
        assert rows[0]["semantics"] == "plain"

    def test_undefined(self):
        profile = bonding_profile(cycle(5))
        assert not profile.defined
        assert profile.rows == []


class TestRepair:
    """Tests for minimal_repair."""

    def test_odd_cycle(self):
        repair = minimal_repair(cycle(5))
        assert repair.edges == [(0, 1)]
        assert repair.size == 1
        assert repair.repaired_j == 2
        assert repair.spanning_tree_bound == 1
        assert not repair.already_admissible

    def test_already_admissible(self):
        repair = minimal_repair(complete(4))
        assert repair.already_admissible
        assert repair.size == 0
        assert repair.repaired_j == 4
        assert repair.spanning_tree_bound == 3

    def test_disconnected_has_no_tree_bound(self):
        g = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 6)])
        repair = minimal_repair(g)
        assert repair.spanning_tree_bound is None
        assert repair.size == 1

    def test_repair_profile(self):
        profile = repair_profile(cycle(5))
        assert profile.j_value == 2


class TestClosedForms:
    """Tests for complete-graph closed forms and the K9 schedule."""

    def test_kn_closed_form(self):
        form = kn_bonding_closed_form(4, 3)
        assert (form.r_minus, form.r_plus) == (1, 1)
        assert kn_bonding_closed_form(4, 2).r_plus == 3

    def test_minimum_unknown_below_half(self):
        assert kn_bonding_closed_form(4, 1).r_minus is None
        assert kn_bonding_closed_form(4, 1).r_plus == 6

    def test_closed_form_domain(self):
        with pytest.raises(ValueError):
            kn_bonding_closed_form(4, 5)
        with pytest.raises(ValueError):
            kn_bonding_closed_form(0, 1)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_minimum_matches_search(self, n):
        """Test r⁻ against the closed form for k >= ceil(n/2)."""
        for k in range((n + 1) // 2, n + 1):
            assert r_minus(complete(n), k).r_minus == kn_bonding_closed_form(n, k).r_minus

    @pytest.mark.slow
    def test_k9_schedule(self):
        stages = apply_removal_schedule(complete(9), K9_REMOVAL_SCHEDULE)
        assert [stage.j_value for stage in stages] == K9_EXPECTED_J
        assert [stage.cumulative for stage in stages] == K9_EXPECTED_CUMULATIVE

    def test_schedule_rejects_missing_edge(self):
        with pytest.raises(GraphError, match="stage 2"):
            apply_removal_schedule(complete(3), [[(0, 1)], [(0, 1)]])
