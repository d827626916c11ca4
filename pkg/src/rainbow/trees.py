"""
Constructive J*-colouring of trees.

Colour the diameter path cyclically 1, 2, 3, 1, ... from its first endpoint,
then continue the cycle along every branch hanging off it. In a tree this
amounts to colouring each vertex by its distance from that endpoint mod 3.
"""

import logging
from collections import deque

from src.colouring.base import Colouring
from src.errors import NotATreeError
from src.graph.core import Graph, iter_bits, structure

logger = logging.getLogger(__name__)


def tree_jstar_colouring(tree: Graph) -> Colouring:
    """
    Build the cyclic diameter-path colouring of a tree.

    Every internal vertex has its parent and at least one child on
    different residues, so it sees all three colours.

    Args:
        tree: Tree on n >= 2 vertices

    Returns:
        Proper colouring with min(3, diam + 1) colours

    Raises:
        NotATreeError: input is not a tree or has fewer than 2 vertices
    """
    if tree.order < 2 or not tree.is_tree():
        raise NotATreeError(
            f"tree colouring requires a tree on >= 2 vertices "
            f"(order {tree.order}, size {tree.size})"
        )

    path = structure(tree).diameter_path
    colours = [0] * tree.order
    queue = deque()
    for i, v in enumerate(path):
        colours[v] = i % 3 + 1
        queue.append(v)

    # branches continue the cycle from their attachment vertex
    while queue:
        v = queue.popleft()
        for u in iter_bits(tree.adjacency[v]):
            if not colours[u]:
                colours[u] = colours[v] % 3 + 1
                queue.append(u)

    logger.debug(f"tree colouring along diameter path {path}: {colours}")
    return Colouring(colour_of=tuple(colours), k=max(colours))
