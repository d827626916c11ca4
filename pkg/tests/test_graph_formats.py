"""
Unit tests for the edge_list and graph6 text formats.
"""

import pytest

from src.errors import GraphFormatError, ScaleLimitExceeded
from src.graph import GraphFamily, GraphFormat, build_graph, generate, parse_graph, serialize_graph
from src.graph.families import complete, cycle, null, path


class TestEdgeList:
    """Tests for the edge_list format."""

    def test_serialize(self):
        assert serialize_graph(path(3)) == "3 2\n0 1\n1 2\n"

    def test_serialize_edgeless(self):
        assert serialize_graph(null(2)) == "2 0\n"

    def test_parse(self):
        g = parse_graph("4 3\n0 1\n1 2\n2 3\n")
        assert g == path(4)

    def test_parse_skips_comments_and_blank_lines(self):
        text = "# triangle\n3 3\n\n0 1\n1 2\n# closing edge\n0 2\n"
        assert parse_graph(text, "edge_list") == complete(3)

    def test_reversed_endpoints(self):
        with pytest.raises(GraphFormatError, match=r"line 3: edge \(2, 1\) must be written with u < v"):
            parse_graph("3 2\n0 1\n2 1\n")

    def test_duplicate_edge(self):
        """Test that a repeated edge line is rejected."""
        with pytest.raises(GraphFormatError, match=r"line 3: duplicate edge \(0, 1\)"):
            parse_graph("3 2\n0 1\n0 1\n")

    def test_round_trip(self):
        g = generate(GraphFamily.PETERSEN)
        assert parse_graph(serialize_graph(g)) == g

    def test_empty_input(self):
        with pytest.raises(GraphFormatError, match="malformed header"):
            parse_graph("")

    def test_malformed_header(self):
        with pytest.raises(GraphFormatError, match="malformed header"):
            parse_graph("three 2\n0 1\n1 2\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError, match="edge count mismatch"):
            parse_graph("3 3\n0 1\n1 2\n")

    def test_index_out_of_range(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_graph("3 1\n0 3\n")

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_graph("3 1\n2 2\n")

    def test_malformed_edge(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_graph("3 1\n0 1 2\n")

    def test_order_above_limit(self):
        with pytest.raises(ScaleLimitExceeded):
            parse_graph("100 0\n")


class TestGraph6:
    """Tests for the graph6 format."""

    def test_triangle(self):
        """Test the well-known encoding of K3."""
        assert serialize_graph(complete(3), GraphFormat.GRAPH6) == "Bw"
        assert parse_graph("Bw", GraphFormat.GRAPH6) == complete(3)

    def test_header_is_accepted(self):
        assert parse_graph(">>graph6<<Bw", "graph6") == complete(3)

    @pytest.mark.parametrize("graph", [path(5), cycle(7), complete(6), generate(GraphFamily.PETERSEN)])
    def test_round_trip(self, graph):
        assert parse_graph(serialize_graph(graph, "graph6"), "graph6") == graph

    def test_edgeless(self):
        g = null(5)
        assert parse_graph(serialize_graph(g, "graph6"), "graph6") == g

    def test_invalid_character(self):
        with pytest.raises(GraphFormatError, match="invalid graph6 character"):
            parse_graph("B w", GraphFormat.GRAPH6)

    def test_empty(self):
        with pytest.raises(GraphFormatError):
            parse_graph("   ", GraphFormat.GRAPH6)

    def test_truncated_payload(self):
        """Test that a payload too short for the declared order is refused."""
        with pytest.raises(GraphFormatError):
            parse_graph("E", GraphFormat.GRAPH6)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            serialize_graph(build_graph(2, [(0, 1)]), "adjacency_matrix")
