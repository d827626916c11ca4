"""
Text formats for graphs.

edge_list: first line "n m", then m lines "u v" with 0 <= u < v < n.
graph6:    the standard bit-packed printable encoding, without header.
"""

import logging
from enum import Enum

import networkx as nx

from src.errors import GraphFormatError, ScaleLimitExceeded
from src.graph.core import Graph, build_graph
from src.settings import MAX_STRUCTURAL_ORDER

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


class GraphFormat(str, Enum):
    EDGE_LIST = "edge_list"
    GRAPH6 = "graph6"


def serialize_graph(graph: Graph, fmt=GraphFormat.EDGE_LIST) -> str:
    """
    Serialize a graph.

    Args:
        graph: Graph to encode
        fmt: GraphFormat (or its string value)

    Returns:
        edge_list text (newline-terminated) or a graph6 string
    """
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.GRAPH6:
        return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()

    edges = graph.edges()
    lines = [f"{graph.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt=GraphFormat.EDGE_LIST) -> Graph:
    """
    Parse a graph from text.

    Raises:
        GraphFormatError: malformed header, out-of-range index, self-loop,
            edge-count mismatch, invalid graph6 character, truncated or
            overlong graph6 payload
    """
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.GRAPH6:
        return _parse_graph6(text)
    return _parse_edge_list(text)


def _parse_int_pair(line: str):
    parts = line.split()
    if len(parts) != 2:
        return None
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        return None


def _parse_edge_list(text: str) -> Graph:
    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise GraphFormatError("malformed header: empty input")

    header = _parse_int_pair(lines[0])
    if header is None or header[0] < 0 or header[1] < 0:
        raise GraphFormatError(f"malformed header: expected 'n m', got {lines[0]!r}")
    n, m = header
    if n > MAX_STRUCTURAL_ORDER:
        raise ScaleLimitExceeded("graph order", n, MAX_STRUCTURAL_ORDER)

    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"edge count mismatch: header declares {m} edges, found {len(body)}"
        )

    edges = []
    seen = set()
    for line_no, line in enumerate(body, start=2):
        pair = _parse_int_pair(line)
        if pair is None:
            raise GraphFormatError(f"line {line_no}: malformed edge {line!r}")
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"line {line_no}: index out of range in edge ({u}, {v}) for order {n}"
            )
        if u == v:
            raise GraphFormatError(f"line {line_no}: self-loop at vertex {u}")
        if u > v:
            raise GraphFormatError(f"line {line_no}: edge ({u}, {v}) must be written with u < v")
        if (u, v) in seen:
            raise GraphFormatError(f"line {line_no}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))

    return build_graph(n, edges)


def _parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("empty graph6 string")

    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")

    codes = [ord(ch) - 63 for ch in data]
    if codes[0] == 63:
        if len(codes) < 4:
            raise GraphFormatError("truncated graph6 payload: incomplete order field")
        if codes[1] == 63:
            raise ScaleLimitExceeded("graph order", 258048, MAX_STRUCTURAL_ORDER)
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]

    if n > MAX_STRUCTURAL_ORDER:
        raise ScaleLimitExceeded("graph order", n, MAX_STRUCTURAL_ORDER)

    needed = (n * (n - 1) // 2 + 5) // 6
    if len(body) < needed:
        raise GraphFormatError(
            f"truncated graph6 payload: expected {needed} data bytes, got {len(body)}"
        )
    if len(body) > needed:
        raise GraphFormatError(
            f"trailing graph6 data: expected {needed} data bytes, got {len(body)}"
        )

    g = nx.from_graph6_bytes(data.encode("ascii"))
    return Graph.from_networkx(g, nodes=range(n))
