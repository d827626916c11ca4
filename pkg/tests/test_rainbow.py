"""
Unit tests for rainbow neighbourhoods and the exact J / J* solvers.
"""

import pytest

from src.colouring import Colouring
from src.errors import ColouringError, GraphError, ScaleLimitExceeded
from src.graph import build_graph, parse_graph_name
from src.graph.families import complete, cycle, null, path, star
from src.rainbow import (
    RainbowMode,
    admits_j,
    certified_j_number,
    find_rainbow_colouring,
    is_rainbow_vertex,
    j_number,
    j_profile,
    j_star_number,
    max_feasible_k,
    naive_profile,
    rainbow_neighbourhood_number,
    rainbow_vertices,
    required_mask,
    upper_bound,
    validate_rainbow_colouring,
)


class TestRainbowVertices:
    """Tests for the rainbow neighbourhood predicate."""

    def test_required_mask(self):
        assert required_mask(star(3), RainbowMode.ALL_VERTICES) == 0b1111
        assert required_mask(star(3), RainbowMode.INTERNAL_ONLY) == 0b0001
        assert required_mask(path(2), "internal_only") == 0

    def test_rainbow_vertices(self):
        g = path(3)
        assert rainbow_vertices(g, Colouring.from_values([1, 2, 1])) == [0, 1, 2]
        assert rainbow_vertices(g, Colouring.from_values([1, 2, 3])) == [1]

    def test_is_rainbow_vertex(self):
        g = path(3)
        c = Colouring.from_values([1, 2, 3])
        assert is_rainbow_vertex(g, c, 1)
        assert not is_rainbow_vertex(g, c, 0)

    def test_improper_colouring_rejected(self):
        with pytest.raises(ColouringError):
            is_rainbow_vertex(path(3), Colouring.from_values([1, 1, 2]), 0)

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphError):
            is_rainbow_vertex(path(3), Colouring.from_values([1, 2, 1]), 3)

    def test_validate_modes(self):
        """Test that pendant vertices are exempt only in internal mode."""
        g = path(4)
        c = Colouring.from_values([1, 2, 3, 1])
        assert not validate_rainbow_colouring(g, c, RainbowMode.ALL_VERTICES)
        assert validate_rainbow_colouring(g, c, RainbowMode.INTERNAL_ONLY)

    def test_validate_rejects_improper_and_mismatched(self):
        assert not validate_rainbow_colouring(path(3), Colouring.from_values([1, 1, 2]), "all_vertices")
        assert not validate_rainbow_colouring(path(3), Colouring.from_values([1, 2]), "all_vertices")


class TestRainbowNeighbourhoodNumber:
    """Tests for r_χ."""

    def test_even_cycle_all_rainbow(self):
        count = rainbow_neighbourhood_number(cycle(6))
        assert count.chromatic_number == 2
        assert count.canonical == 6
        assert count.minimum == count.maximum == 6
        assert count.colourings_examined == 1
        assert count.all_rainbow_witness is not None

    def test_odd_cycle_never_all_rainbow(self):
        count = rainbow_neighbourhood_number(cycle(5))
        assert count.chromatic_number == 3
        assert count.maximum < 5
        assert count.all_rainbow_witness is None

    def test_star(self):
        count = rainbow_neighbourhood_number(star(3))
        assert count.canonical == 4
        assert count.canonical_vertices == [0, 1, 2, 3]

    def test_range_brackets_canonical(self):
        count = rainbow_neighbourhood_number(parse_graph_name("K1 o P3"))
        assert count.minimum <= count.canonical <= count.maximum

    def test_empty_graph(self):
        with pytest.raises(GraphError):
            rainbow_neighbourhood_number(null(0))

    def test_scale_limit(self):
        with pytest.raises(ScaleLimitExceeded):
            rainbow_neighbourhood_number(path(13))


class TestSolver:
    """Tests for find_rainbow_colouring and the J-profile."""

    def test_upper_bound(self):
        assert upper_bound(cycle(6), RainbowMode.ALL_VERTICES) == 3
        assert upper_bound(star(4), RainbowMode.INTERNAL_ONLY) == 5
        assert upper_bound(path(2), RainbowMode.INTERNAL_ONLY) == 2
        assert upper_bound(null(0), RainbowMode.ALL_VERTICES) == 0

    def test_lexicographically_least_witness(self):
        witness = find_rainbow_colouring(cycle(6), 3)
        assert witness.colour_of == (1, 2, 3, 1, 2, 3)

    def test_no_colouring(self):
        assert find_rainbow_colouring(cycle(5), 3) is None
        assert find_rainbow_colouring(path(3), 3) is None

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            find_rainbow_colouring(path(3), 0)

    def test_k_above_order(self):
        assert find_rainbow_colouring(path(2), 3, RainbowMode.INTERNAL_ONLY) is None

    def test_cycle_profile(self):
        profile = j_profile(cycle(6))
        assert profile.feasible_k == [2, 3]
        assert profile.j_value == 3
        assert profile.admissible
        assert set(profile.witnesses) == {2, 3}

    def test_inadmissible_cycle(self):
        profile = j_profile(cycle(5))
        assert profile.feasible_k == []
        assert profile.j_value is None
        assert not profile.admissible

    def test_star_internal_profile(self):
        profile = j_profile(star(4), RainbowMode.INTERNAL_ONLY)
        assert profile.feasible_k == [2, 3, 4, 5]
        assert profile.j_value == 5

    def test_null_convention(self):
        profile = j_profile(null(3))
        assert profile.j_value == 1
        assert profile.convention_applied
        assert profile.witnesses[1].colour_of == (1, 1, 1)

    def test_empty_graph_convention(self):
        profile = j_profile(null(0))
        assert profile.j_value == 1
        assert profile.witnesses == {}

    def test_witnesses_are_valid(self):
        g = parse_graph_name("K1 o C6")
        for mode in RainbowMode:
            profile = j_profile(g, mode)
            for k, witness in profile.witnesses.items():
                assert witness.k == k
                assert validate_rainbow_colouring(g, witness, mode)

    def test_profile_scale_limit(self):
        with pytest.raises(ScaleLimitExceeded):
            j_profile(complete(13))

    def test_profile_custom_cap(self):
        with pytest.raises(ScaleLimitExceeded):
            j_profile(path(6), max_order=5)

    def test_summary(self):
        assert j_profile(path(4)).to_summary() == {"mode": "all_vertices", "feasible_k": [2], "j": 2}


class TestJNumbers:
    """Tests for J, J* and admissibility."""

    @pytest.mark.parametrize("graph,j,j_star", [
        (path(2), 2, 2),
        (path(5), 2, 3),
        (cycle(4), 2, 2),
        (cycle(6), 3, 3),
        (cycle(7), None, None),
        (complete(1), 1, 1),
        (complete(5), 5, 5),
        (star(4), 2, 5),
        (null(4), 1, 1),
    ])
    def test_values(self, graph, j, j_star):
        assert j_number(graph) == j
        assert j_star_number(graph) == j_star

    def test_admits_j(self):
        assert admits_j(cycle(9))
        assert not admits_j(cycle(5))

    def test_max_feasible_matches_profile(self):
        g = parse_graph_name("P2 x P3")
        assert max_feasible_k(g) == j_profile(g).j_value

    def test_certified(self):
        g = cycle(6)
        assert certified_j_number(g, Colouring.from_values([1, 2, 3, 1, 2, 3])) == 3
        # a valid colouring below δ+1 certifies nothing
        assert certified_j_number(g, Colouring.from_values([1, 2, 1, 2, 1, 2])) is None
        assert certified_j_number(g, Colouring.from_values([1, 2, 3, 1, 2, 1])) is None
        assert certified_j_number(null(3), Colouring.from_values([1, 1, 1])) is None


class TestNaiveProfile:
    """Tests for the brute-force reference solver."""

    def test_agrees_on_small_graphs(self):
        for name in ["P4", "C5", "C6", "K4", "K1,3", "K2,3", "P2 x P3"]:
            g = parse_graph_name(name)
            for mode in RainbowMode:
                assert naive_profile(g, mode) == j_profile(g, mode).feasible_k, (name, mode)

    def test_edgeless(self):
        assert naive_profile(null(3)) == [1]

    def test_disconnected(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert naive_profile(g) == [2]

    def test_scale_limit(self):
        with pytest.raises(ScaleLimitExceeded):
            naive_profile(path(9))
