"""Binary structures with typed adjacency: the common ground of orders and
graphs for clique terms and tree-questionable decompositions."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ValidationError
from .order import FiniteOrder, from_relations

ORDER_TYPES = ("LT", "GT", "INC")
GRAPH_TYPES = ("EDGE", "NONE")

FLIPS = {
    "order": {"LT": "GT", "GT": "LT", "INC": "INC"},
    "graph": {"EDGE": "EDGE", "NONE": "NONE"},
}
DEFAULTS = {"order": "INC", "graph": "NONE"}


class AdjacencyStructure:
    """n vertices with a type for every ordered pair of distinct vertices.

    ``kind`` selects the type set: "order" (LT/GT/INC, flip swaps LT and GT)
    or "graph" (EDGE/NONE, flip is the identity).  The diagonal holds "=".
    """

    __slots__ = ("kind", "types")

    def __init__(self, kind: str, types: Sequence[Sequence[str]]):
        if kind not in FLIPS:
            raise ValueError(f"unknown structure kind {kind!r}")
        self.kind = kind
        self.types = tuple(tuple(row) for row in types)
        flip = FLIPS[kind]
        n = len(self.types)
        for i in range(n):
            if len(self.types[i]) != n:
                raise ValidationError("type table is not square")
            for j in range(n):
                if i == j:
                    continue
                t = self.types[i][j]
                if t not in flip:
                    raise ValidationError(f"type {t!r} not allowed for {kind}")
                if self.types[j][i] != flip[t]:
                    raise ValidationError(f"types of ({i},{j}) and ({j},{i}) are not flips")

    @property
    def n(self) -> int:
        return len(self.types)

    @property
    def default(self) -> str:
        return DEFAULTS[self.kind]

    def flip(self, t: str) -> str:
        return FLIPS[self.kind][t]

    def type(self, i: int, j: int) -> str:
        return self.types[i][j]

    @classmethod
    def empty(cls, kind: str, n: int) -> "AdjacencyStructure":
        d = DEFAULTS[kind]
        return cls(kind, [["=" if i == j else d for j in range(n)] for i in range(n)])

    @classmethod
    def from_pairs(cls, kind: str, n: int, pairs: Iterable[tuple[int, int, str]]):
        """Structure with the given (i, j, type) pairs; the rest default."""
        t = [["=" if i == j else DEFAULTS[kind] for j in range(n)] for i in range(n)]
        flip = FLIPS[kind]
        for i, j, ty in pairs:
            if i == j:
                raise ValidationError("self pair in structure")
            t[i][j] = ty
            t[j][i] = flip[ty]
        return cls(kind, t)

    @classmethod
    def from_order(cls, o: FiniteOrder) -> "AdjacencyStructure":
        t = [[("=" if i == j else o.rel(i, j).name) for j in range(o.n)] for i in range(o.n)]
        return cls("order", t)

    @classmethod
    def graph(cls, n: int, edges: Iterable[tuple[int, int]]) -> "AdjacencyStructure":
        return cls.from_pairs("graph", n, [(i, j, "EDGE") for i, j in edges])

    def to_order(self) -> FiniteOrder:
        if self.kind != "order":
            raise ValidationError("not an order structure")
        return from_relations(self.n, [(i, j) for i in range(self.n) for j in range(self.n)
                                       if self.types[i][j] == "LT"])

    def pairs(self) -> list[tuple[int, int, str]]:
        """Non-default pairs (i < j) with their type seen from i."""
        d = self.default
        return [(i, j, self.types[i][j]) for i in range(self.n)
                for j in range(i + 1, self.n) if self.types[i][j] != d]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _ in self.pairs()]

    def induced(self, subset: Sequence[int]) -> "AdjacencyStructure":
        return AdjacencyStructure(self.kind, [[self.types[a][b] for b in subset] for a in subset])

    def permuted(self, perm: Sequence[int]) -> "AdjacencyStructure":
        """Vertex i becomes vertex perm[i]."""
        n = self.n
        t = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                t[perm[i]][perm[j]] = self.types[i][j]
        return AdjacencyStructure(self.kind, t)

    def __eq__(self, other):
        return (isinstance(other, AdjacencyStructure) and self.kind == other.kind
                and self.types == other.types)

    def __hash__(self):
        return hash((self.kind, self.types))

    def __repr__(self):
        return f"AdjacencyStructure({self.kind}, n={self.n}, pairs={self.pairs()})"


def as_structure(x) -> AdjacencyStructure:
    if isinstance(x, AdjacencyStructure):
        return x
    if isinstance(x, FiniteOrder):
        return AdjacencyStructure.from_order(x)
    raise TypeError(f"cannot view {type(x).__name__} as an adjacency structure")
