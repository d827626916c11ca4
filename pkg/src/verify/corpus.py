"""
Instance corpus for a harness run.

Everything is derived from the CorpusConfig and its seeds, so the same
config always yields the same instances in the same order.
"""

import logging
import random
from typing import List, Tuple

from src.graph.families import GraphFamily
from src.graph.notation import GraphSpec, parse_graph_spec
from src.graph.operations import CombineKind, DerivativeKind
from src.verify.schemas import CorpusConfig

logger = logging.getLogger(__name__)

PREDICTED_DERIVATIVES = (
    DerivativeKind.LINE,
    DerivativeKind.MIDDLE,
    DerivativeKind.TOTAL,
    DerivativeKind.JUMP,
    DerivativeKind.CENTRAL,
)


def _span(bounds: Tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


def family_specs(config: CorpusConfig) -> List[GraphSpec]:
    """Paths, cycles, complete graphs, stars and null graphs in the configured ranges."""
    specs = []
    specs += [GraphSpec.member(GraphFamily.PATH, n) for n in _span(config.path_range) if n >= 1]
    specs += [GraphSpec.member(GraphFamily.CYCLE, n) for n in _span(config.cycle_range) if n >= 3]
    specs += [GraphSpec.member(GraphFamily.COMPLETE, n) for n in _span(config.complete_range) if n >= 1]
    specs += [GraphSpec.member(GraphFamily.STAR, n) for n in _span(config.star_range) if n >= 1]
    specs += [GraphSpec.member(GraphFamily.NULL, n) for n in _span(config.null_range)]
    return specs


def random_tree_specs(config: CorpusConfig) -> List[GraphSpec]:
    rng = random.Random(config.random_tree_seed)
    specs = []
    for _ in range(config.random_tree_count):
        n = rng.randint(3, config.random_tree_max_order)
        specs.append(GraphSpec.member(GraphFamily.RANDOM_TREE, n, seed=rng.randrange(2 ** 31)))
    return specs


def random_graph_specs(config: CorpusConfig) -> List[GraphSpec]:
    """G(n, p) instances with n in 2..max and p drawn from [0.15, 0.7]."""
    rng = random.Random(config.random_graph_seed)
    specs = []
    for _ in range(config.random_graph_count):
        n = rng.randint(2, max(2, config.random_graph_max_order))
        probability = round(rng.uniform(0.15, 0.7), 2)
        specs.append(GraphSpec.member(
            GraphFamily.RANDOM_GRAPH, n, seed=rng.randrange(2 ** 31), edge_probability=probability,
        ))
    return specs


def general_specs(config: CorpusConfig) -> List[GraphSpec]:
    """The instances universal claims quantify over."""
    return family_specs(config) + random_tree_specs(config) + random_graph_specs(config)


def derivative_specs(config: CorpusConfig) -> List[GraphSpec]:
    """Line, middle, total, jump and central graphs of paths and cycles."""
    specs = []
    for n in _span(config.derivative_range):
        if n >= 2:
            path = GraphSpec.member(GraphFamily.PATH, n)
            specs += [path.derived(kind) for kind in PREDICTED_DERIVATIVES]
        if n >= 3:
            cycle = GraphSpec.member(GraphFamily.CYCLE, n)
            specs += [cycle.derived(kind) for kind in PREDICTED_DERIVATIVES]
    return specs


def pair_specs(pairs: List[Tuple[str, str]], kind: CombineKind) -> List[GraphSpec]:
    return [parse_graph_spec(left).combined(parse_graph_spec(right), kind) for left, right in pairs]


def named_specs(names: List[str]) -> List[GraphSpec]:
    return [parse_graph_spec(name) for name in names]
