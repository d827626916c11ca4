"""
Compact notation for named graph instances.

Used by CLI flags, corpus configs and report descriptors. Grammar:

    expr := term (OP term)*            left-associative
    term := NAME | PREFIX "(" expr ")" | "(" expr ")"
    NAME := Pn | Cn | Kn | K1,m | Ka,b | Nn | Petersen
            | RandomTree[n,seed] | RandomGraph[n,prob,seed]
    PREFIX := L (line) | J (jump) | M (middle) | T (total) | C (central)
              | S (subdivision) | co (complement)
    OP := o (corona) | + (join) | x (cartesian) | u (disjoint union)

Binary operators must be separated from their operands by whitespace.
"""

import logging
import re
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from src.errors import GraphError, GraphFormatError
from src.graph.core import Graph
from src.graph.families import GraphFamily, generate
from src.graph.operations import CombineKind, DerivativeKind, combine, derive

logger = logging.getLogger(__name__)


DERIVATIVE_PREFIXES = {
    "L": DerivativeKind.LINE,
    "J": DerivativeKind.JUMP,
    "M": DerivativeKind.MIDDLE,
    "T": DerivativeKind.TOTAL,
    "C": DerivativeKind.CENTRAL,
    "S": DerivativeKind.SUBDIVISION,
    "co": DerivativeKind.COMPLEMENT,
}

COMBINE_SYMBOLS = {
    "o": CombineKind.CORONA,
    "+": CombineKind.JOIN,
    "x": CombineKind.CARTESIAN,
    "u": CombineKind.DISJOINT_UNION,
}

_PREFIX_OF = {kind: prefix for prefix, kind in DERIVATIVE_PREFIXES.items()}
_SYMBOL_OF = {kind: symbol for symbol, kind in COMBINE_SYMBOLS.items()}

TOKEN_PATTERN = re.compile(
    r"\s*(?:"
    r"(?P<prefix>co|[LJMTCS])\("
    r"|(?P<tree>RandomTree\[(?P<tree_n>\d+),(?P<tree_seed>\d+)\])"
    r"|(?P<gnp>RandomGraph\[(?P<gnp_n>\d+),(?P<gnp_p>[0-9.]+),(?P<gnp_seed>\d+)\])"
    r"|(?P<petersen>Petersen)"
    r"|(?P<bipartite>K(?P<part_a>\d+),(?P<part_b>\d+))"
    r"|(?P<name>[PCKN])(?P<size>\d+)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
    r"|(?P<op>[o+xu])(?=\s)"
    r")"
)

_NAMED_FAMILIES = {
    "P": GraphFamily.PATH,
    "C": GraphFamily.CYCLE,
    "K": GraphFamily.COMPLETE,
    "N": GraphFamily.NULL,
}


# ============================================================================
# GraphSpec
# ============================================================================

class GraphSpec(BaseModel):
    """Descriptor of a graph instance: a family member, a derivative or a combination."""
    model_config = ConfigDict(frozen=True)

    family: Optional[GraphFamily] = None
    n: Optional[int] = None
    m: Optional[int] = None
    seed: Optional[int] = None
    edge_probability: Optional[float] = None
    derivative: Optional[DerivativeKind] = None
    combination: Optional[CombineKind] = None
    operands: Tuple["GraphSpec", ...] = ()

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def member(cls, family, n: Optional[int] = None, m: Optional[int] = None,
               seed: Optional[int] = None, edge_probability: Optional[float] = None) -> "GraphSpec":
        return cls(family=GraphFamily(family), n=n, m=m, seed=seed, edge_probability=edge_probability)

    def derived(self, kind) -> "GraphSpec":
        return GraphSpec(derivative=DerivativeKind(kind), operands=(self,))

    def combined(self, other: "GraphSpec", kind) -> "GraphSpec":
        return GraphSpec(combination=CombineKind(kind), operands=(self, other))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def is_member(self) -> bool:
        return self.family is not None

    def is_family(self, family, n: Optional[int] = None) -> bool:
        if self.family is not GraphFamily(family):
            return False
        return n is None or self.n == n

    def build(self) -> Graph:
        """Construct the described graph."""
        if self.family is not None:
            return generate(
                self.family, n=self.n, m=self.m, seed=self.seed,
                edge_probability=0.5 if self.edge_probability is None else self.edge_probability,
            )
        if self.derivative is not None:
            return derive(self.operands[0].build(), self.derivative)
        left, right = self.operands
        return combine(left.build(), right.build(), self.combination)

    def label(self) -> str:
        """Canonical notation; parse_graph_spec(spec.label()) == spec."""
        if self.family is not None:
            return _member_label(self)
        if self.derivative is not None:
            return f"{_PREFIX_OF[self.derivative]}({self.operands[0].label()})"
        left, right = (
            f"({s.label()})" if s.combination is not None else s.label()
            for s in self.operands
        )
        return f"{left} {_SYMBOL_OF[self.combination]} {right}"

    def __str__(self) -> str:
        return self.label()


GraphSpec.model_rebuild()


def _member_label(spec: GraphSpec) -> str:
    family = spec.family
    if family is GraphFamily.PETERSEN:
        return "Petersen"
    if family is GraphFamily.STAR:
        return f"K1,{spec.n}"
    if family is GraphFamily.COMPLETE_BIPARTITE:
        return f"K{spec.n},{spec.m}"
    if family is GraphFamily.RANDOM_TREE:
        return f"RandomTree[{spec.n},{spec.seed}]"
    if family is GraphFamily.RANDOM_GRAPH:
        return f"RandomGraph[{spec.n},{spec.edge_probability},{spec.seed}]"
    prefix = {v: k for k, v in _NAMED_FAMILIES.items()}[family]
    return f"{prefix}{spec.n}"


# ============================================================================
# Parsing
# ============================================================================

def _tokenize(text: str) -> List[re.Match]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = TOKEN_PATTERN.match(stripped, position)
        if match is None or match.end() == position:
            raise GraphFormatError(
                f"unknown graph name at position {position}: {stripped[position:]!r}"
            )
        tokens.append(match)
        position = match.end()
    return tokens


class _Parser:
    """Recursive descent over the token stream."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Optional[re.Match]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> re.Match:
        token = self.peek()
        if token is None:
            raise GraphFormatError(f"unexpected end of graph name {self.text!r}")
        self.index += 1
        return token

    def expect_rparen(self) -> None:
        token = self.advance()
        if token.group("rparen") is None:
            raise GraphFormatError(f"expected ')' in graph name {self.text!r}")

    def parse(self) -> GraphSpec:
        spec = self.expression()
        if self.peek() is not None:
            raise GraphFormatError(f"unexpected trailing input in graph name {self.text!r}")
        return spec

    def expression(self) -> GraphSpec:
        spec = self.term()
        while True:
            token = self.peek()
            if token is None or token.group("op") is None:
                return spec
            self.advance()
            spec = spec.combined(self.term(), COMBINE_SYMBOLS[token.group("op")])

    def term(self) -> GraphSpec:
        token = self.advance()
        if token.group("prefix"):
            inner = self.expression()
            self.expect_rparen()
            return inner.derived(DERIVATIVE_PREFIXES[token.group("prefix")])
        if token.group("lparen"):
            inner = self.expression()
            self.expect_rparen()
            return inner
        if token.group("petersen"):
            return GraphSpec.member(GraphFamily.PETERSEN)
        if token.group("tree"):
            return GraphSpec.member(
                GraphFamily.RANDOM_TREE, n=int(token.group("tree_n")), seed=int(token.group("tree_seed"))
            )
        if token.group("gnp"):
            try:
                probability = float(token.group("gnp_p"))
            except ValueError:
                raise GraphFormatError(f"invalid edge probability in {token.group('gnp')!r}")
            return GraphSpec.member(
                GraphFamily.RANDOM_GRAPH, n=int(token.group("gnp_n")),
                seed=int(token.group("gnp_seed")), edge_probability=probability,
            )
        if token.group("bipartite"):
            a, b = int(token.group("part_a")), int(token.group("part_b"))
            if a == 1:
                return GraphSpec.member(GraphFamily.STAR, n=b)
            return GraphSpec.member(GraphFamily.COMPLETE_BIPARTITE, n=a, m=b)
        if token.group("name"):
            return GraphSpec.member(_NAMED_FAMILIES[token.group("name")], n=int(token.group("size")))
        raise GraphFormatError(f"unexpected {token.group(0).strip()!r} in graph name {self.text!r}")


def parse_graph_spec(text: str) -> GraphSpec:
    """
    Parse a graph name into a GraphSpec.

    Raises:
        GraphFormatError: unknown name or malformed expression
    """
    if not text or not text.strip():
        raise GraphFormatError("empty graph name")
    return _Parser(text.strip()).parse()


def parse_graph_name(text: str) -> Graph:
    """
    Parse a graph name and build it.

    Raises:
        GraphFormatError: unknown name or malformed expression
        GraphError: parameters outside a family's domain
    """
    spec = parse_graph_spec(text)
    try:
        return spec.build()
    except GraphFormatError:
        raise
    except GraphError as e:
        raise GraphError(f"{spec.label()}: {e}")
