"""
Unit tests for the graph value type, families and structure reports.

Tests cover:
- Graph validation and bit-set queries
- Construction from edge lists and networkx
- Standard families and their numbering
- StructureReport (pendant/internal split, diameter path)
"""

import networkx as nx
import pytest
from pydantic import ValidationError

from src.errors import GraphError, ScaleLimitExceeded
from src.graph import Graph, GraphFamily, build_graph, generate, iter_bits, structure
from src.graph.families import complete, cycle, null, path, star


class TestGraph:
    """Tests for the Graph model."""

    def test_iter_bits(self):
        """Test that set bits come out in increasing order."""
        assert list(iter_bits(0b101001)) == [0, 3, 5]
        assert list(iter_bits(0)) == []

    def test_build_and_measures(self):
        """Test order, size and degrees of a small graph."""
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
        assert g.order == 4
        assert g.size == 4
        assert g.degrees() == (1, 3, 2, 2)
        assert g.min_degree == 1
        assert g.max_degree == 3
        assert g.neighbours(1) == [0, 2, 3]
        assert g.has_edge(3, 1)
        assert not g.has_edge(0, 2)

    def test_duplicate_edges_merge(self):
        """Test that repeated edges are stored once."""
        g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
        assert g.size == 1
        assert g.edges() == [(0, 1)]

    def test_edges_sorted(self):
        """Test that edges are listed as (u, v), u < v, in sorted order."""
        g = build_graph(4, [(3, 0), (2, 1), (1, 0)])
        assert g.edges() == [(0, 1), (0, 3), (1, 2)]

    def test_closed_mask(self):
        g = path(3)
        assert g.closed_mask(1) == 0b111
        assert g.closed_mask(0) == 0b011

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            build_graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="out of range"):
            build_graph(3, [(0, 3)])

    def test_negative_order_rejected(self):
        with pytest.raises(GraphError):
            build_graph(-1, [])

    def test_structural_limit(self):
        """Test that orders above the structural ceiling are refused."""
        with pytest.raises(ScaleLimitExceeded):
            build_graph(65, [])

    def test_validation_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValidationError):
            Graph(order=2, adjacency=(0b10, 0))

    def test_validation_rejects_loop(self):
        with pytest.raises(ValidationError):
            Graph(order=1, adjacency=(0b1,))

    def test_empty_graph(self):
        """Test the graph on zero vertices."""
        g = build_graph(0, [])
        assert g.size == 0
        assert g.min_degree == 0
        assert g.max_degree == 0
        assert g.is_edgeless
        assert not g.is_connected()
        assert not g.is_tree()

    def test_graphs_are_hashable_values(self):
        """Test that equal graphs compare and hash equal."""
        assert path(4) == build_graph(4, [(2, 3), (0, 1), (1, 2)])
        assert len({path(4), build_graph(4, [(0, 1), (1, 2), (2, 3)])}) == 1


class TestConnectivity:
    """Tests for components, trees and bipartiteness."""

    def test_components(self):
        g = build_graph(5, [(0, 1), (3, 4)])
        assert g.component_masks() == [0b00011, 0b00100, 0b11000]
        assert not g.is_connected()

    def test_tree(self):
        assert path(5).is_tree()
        assert star(3).is_tree()
        assert not cycle(4).is_tree()
        assert not build_graph(4, [(0, 1), (2, 3)]).is_tree()

    def test_bipartite(self):
        assert cycle(6).is_bipartite()
        assert not cycle(5).is_bipartite()

    def test_without_edges(self):
        g = complete(4).without_edges([(0, 1), (2, 3)])
        assert g.size == 4
        assert g.degrees() == (2, 2, 2, 2)
        assert g.is_connected()

    def test_induced_subgraph(self):
        """Test relabelling of an induced subgraph."""
        g = cycle(5).induced_subgraph([4, 0, 1])
        assert g.order == 3
        assert g.edges() == [(0, 1), (1, 2)]


class TestNetworkxBridge:
    """Tests for conversion to and from networkx."""

    def test_round_trip(self):
        g = generate(GraphFamily.PETERSEN)
        assert Graph.from_networkx(g.to_networkx()) == g

    def test_custom_node_order(self):
        nxg = nx.Graph([("a", "b"), ("b", "c")])
        g = Graph.from_networkx(nxg, nodes=["b", "a", "c"])
        assert g.edges() == [(0, 1), (0, 2)]

    def test_incomplete_node_order(self):
        nxg = nx.Graph([("a", "b")])
        with pytest.raises(GraphError):
            Graph.from_networkx(nxg, nodes=["a", "a"])


class TestFamilies:
    """Tests for the standard graph families."""

    def test_path_and_cycle(self):
        assert path(1).order == 1 and path(1).size == 0
        assert path(6).size == 5
        assert cycle(7).size == 7
        assert cycle(7).degrees() == (2,) * 7

    def test_complete(self):
        assert complete(5).size == 10

    def test_star_centre_first(self):
        """Test that the star's centre is vertex 0."""
        g = star(4)
        assert g.order == 5
        assert g.degree(0) == 4
        assert all(g.degree(v) == 1 for v in range(1, 5))

    def test_complete_bipartite(self):
        g = generate(GraphFamily.COMPLETE_BIPARTITE, n=2, m=3)
        assert g.order == 5
        assert g.size == 6
        assert not g.has_edge(0, 1)
        assert g.has_edge(0, 2)

    def test_null(self):
        assert null(0).order == 0
        assert null(4).is_edgeless

    def test_petersen(self):
        g = generate("petersen")
        assert g.order == 10
        assert g.size == 15
        assert set(g.degrees()) == {3}

    def test_random_tree_deterministic(self):
        """Test that a seed fixes the random tree."""
        first = generate(GraphFamily.RANDOM_TREE, n=9, seed=11)
        second = generate(GraphFamily.RANDOM_TREE, n=9, seed=11)
        assert first == second
        assert first.is_tree()

    def test_random_graph_deterministic(self):
        first = generate(GraphFamily.RANDOM_GRAPH, n=8, seed=3, edge_probability=0.4)
        assert first == generate(GraphFamily.RANDOM_GRAPH, n=8, seed=3, edge_probability=0.4)

    @pytest.mark.parametrize("family,n", [
        (GraphFamily.PATH, 0),
        (GraphFamily.CYCLE, 2),
        (GraphFamily.COMPLETE, 0),
        (GraphFamily.STAR, 0),
        (GraphFamily.NULL, -1),
    ])
    def test_domain_errors(self, family, n):
        with pytest.raises(GraphError):
            generate(family, n=n)

    def test_random_requires_seed(self):
        with pytest.raises(GraphError, match="seed"):
            generate(GraphFamily.RANDOM_TREE, n=5)

    def test_edge_probability_range(self):
        with pytest.raises(GraphError):
            generate(GraphFamily.RANDOM_GRAPH, n=5, seed=1, edge_probability=1.5)

    def test_missing_size(self):
        with pytest.raises(GraphError, match="requires a size"):
            generate(GraphFamily.PATH)


class TestStructure:
    """Tests for StructureReport."""

    def test_path_report(self):
        report = structure(path(4))
        assert report.pendant == [0, 3]
        assert report.internal == [1, 2]
        assert report.isolated == []
        assert report.diameter == 3
        assert report.diameter_path == [0, 1, 2, 3]
        assert report.connected
        assert report.bipartite

    def test_star_diameter_path_least_endpoints(self):
        """Test that diameter ties go to the least endpoint pair."""
        report = structure(star(3))
        assert report.diameter == 2
        assert report.diameter_path == [1, 0, 2]

    def test_isolated_vertices(self):
        report = structure(build_graph(3, [(0, 1)]))
        assert report.isolated == [2]
        assert not report.connected
        assert report.components == [[0, 1], [2]]

    def test_degree_sequence(self):
        report = structure(star(3))
        assert report.degree_sequence == [3, 1, 1, 1]

    def test_empty(self):
        report = structure(null(0))
        assert report.diameter == 0
        assert report.diameter_path == []
