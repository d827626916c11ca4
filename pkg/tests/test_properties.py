"""
Property-based tests over small random graphs.

The pruned solver is checked against plain enumeration, and every witness it
returns is re-validated from scratch.
"""

from itertools import combinations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from src.colouring import chromatic_number, invert_colouring, is_proper, normalise_colouring
from src.graph import GraphFamily, build_graph, generate, structure
from src.rainbow import RainbowMode, j_profile, naive_profile, tree_jstar_colouring, validate_rainbow_colouring


@st.composite
def small_graphs(draw, max_order=5):
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


modes = st.sampled_from([RainbowMode.ALL_VERTICES, RainbowMode.INTERNAL_ONLY])


class TestSolverProperties:
    """The solver against enumeration and its own bounds."""

    @settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(graph=small_graphs(), mode=modes)
    def test_matches_naive_enumeration(self, graph, mode):
        assert j_profile(graph, mode).feasible_k == naive_profile(graph, mode)

    @settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(graph=small_graphs(), mode=modes)
    def test_witnesses_validate(self, graph, mode):
        profile = j_profile(graph, mode)
        for k, witness in profile.witnesses.items():
            assert witness.k == k
            assert is_proper(graph, witness)
            assert validate_rainbow_colouring(graph, witness, mode)

    @settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(graph=small_graphs())
    def test_j_between_chi_and_degree_bound(self, graph):
        profile = j_profile(graph, RainbowMode.ALL_VERTICES)
        if profile.admissible:
            assert chromatic_number(graph).number <= profile.j_value <= graph.min_degree + 1

    @settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(graph=small_graphs())
    def test_internal_mode_is_weaker(self, graph):
        """Test that every J-colouring also satisfies the internal-only requirement."""
        all_k = set(j_profile(graph, RainbowMode.ALL_VERTICES).feasible_k)
        internal_k = set(j_profile(graph, RainbowMode.INTERNAL_ONLY).feasible_k)
        assert all_k <= internal_k

    @pytest.mark.slow
    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(graph=small_graphs(max_order=8), mode=modes)
    def test_matches_naive_enumeration_up_to_eight_vertices(self, graph, mode):
        assert j_profile(graph, mode).feasible_k == naive_profile(graph, mode)


class TestColouringProperties:
    """Algebraic properties of colourings."""

    @given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=10))
    def test_inversion_is_an_involution(self, values):
        colouring = normalise_colouring(values)
        assert invert_colouring(invert_colouring(colouring)) == colouring
        assert colouring.theta == tuple(reversed(invert_colouring(colouring).theta))


class TestTreeProperties:
    """The constructive tree colouring on random trees."""

    @settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(n=st.integers(min_value=2, max_value=14), seed=st.integers(min_value=0, max_value=10_000))
    def test_tree_colouring_is_valid(self, n, seed):
        tree = generate(GraphFamily.RANDOM_TREE, n=n, seed=seed)
        colouring = tree_jstar_colouring(tree)
        assert colouring.k == min(3, structure(tree).diameter + 1)
        assert validate_rainbow_colouring(tree, colouring, RainbowMode.INTERNAL_ONLY)
