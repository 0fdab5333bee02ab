"""Finite partial orders stored as full comparability tables.

Elements are the indices 0..n-1.  Next to the table every order keeps the
strict down-set and up-set of each element as integer bitmasks, which is
what most of the algorithms in this package actually iterate over.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, DuplicateError, ValidationError


class Rel(IntEnum):
    EQ = 0
    LT = 1
    GT = 2
    INC = 3

    def flip(self) -> "Rel":
        return _FLIP[self]

    def __str__(self):
        return self.name


_FLIP = {Rel.EQ: Rel.EQ, Rel.LT: Rel.GT, Rel.GT: Rel.LT, Rel.INC: Rel.INC}

EQ, LT, GT, INC = Rel.EQ, Rel.LT, Rel.GT, Rel.INC


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


class FiniteOrder:
    """A strict partial order on 0..n-1.

    ``cmp[i][j]`` is one of EQ, LT, GT, INC.  Instances are immutable and
    hashable; two orders are equal when their tables are equal.
    """

    __slots__ = ("_cmp", "_down", "_up", "_hash")

    def __init__(self, cmp: Sequence[Sequence[int]], check: bool = True):
        table = tuple(tuple(Rel(v) for v in row) for row in cmp)
        n = len(table)
        down = [0] * n
        up = [0] * n
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValidationError("comparability table is not square")
            for j, v in enumerate(row):
                if v == LT:
                    up[i] |= 1 << j
                elif v == GT:
                    down[i] |= 1 << j
        self._cmp = table
        self._down = tuple(down)
        self._up = tuple(up)
        self._hash = None
        if check:
            self._check()

    def _check(self):
        n = self.n
        for i in range(n):
            if self._cmp[i][i] != EQ:
                raise ValidationError(f"cmp[{i}][{i}] must be EQ")
            for j in range(n):
                if i != j and self._cmp[i][j] == EQ:
                    raise ValidationError(f"cmp[{i}][{j}] is EQ for distinct elements")
                if self._cmp[j][i] != self._cmp[i][j].flip():
                    raise ValidationError(f"cmp[{i}][{j}] and cmp[{j}][{i}] disagree")
        for i in range(n):
            for j in bits(self._up[i]):
                if self._up[j] & ~self._up[i]:
                    raise ValidationError("comparability table is not transitive")

    # basic accessors

    @property
    def n(self) -> int:
        return len(self._cmp)

    @property
    def cmp(self) -> tuple:
        return self._cmp

    def rel(self, i: int, j: int) -> Rel:
        return self._cmp[i][j]

    def lt(self, i: int, j: int) -> bool:
        return self._cmp[i][j] == LT

    def comparable(self, i: int, j: int) -> bool:
        return self._cmp[i][j] in (LT, GT)

    def down(self, i: int) -> int:
        """Bitmask of the elements strictly below i."""
        return self._down[i]

    def up(self, i: int) -> int:
        """Bitmask of the elements strictly above i."""
        return self._up[i]

    def relations(self) -> list[tuple[int, int]]:
        """All pairs (i, j) with i < j in the order."""
        return [(i, j) for i in range(self.n) for j in bits(self._up[i])]

    def is_total(self) -> bool:
        return all(self._cmp[i][j] != INC for i in range(self.n) for j in range(self.n))

    def __eq__(self, other):
        return isinstance(other, FiniteOrder) and self._cmp == other._cmp

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._cmp)
        return self._hash

    def __repr__(self):
        return f"FiniteOrder(n={self.n}, lt={self.relations()})"

    def __len__(self):
        return self.n

    # constructors

    @classmethod
    def from_relations(cls, n: int, rels: Iterable[tuple[int, int]]) -> "FiniteOrder":
        return from_relations(n, rels)

    @classmethod
    def chain(cls, n: int) -> "FiniteOrder":
        return from_relations(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> "FiniteOrder":
        return from_relations(n, [])


def _from_masks(n: int, up: Sequence[int]) -> FiniteOrder:
    table = [[INC] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = EQ
        for j in bits(up[i]):
            table[i][j] = LT
            table[j][i] = GT
    return FiniteOrder(table, check=False)


def from_relations(n: int, rels: Iterable[tuple[int, int]]) -> FiniteOrder:
    """Transitive closure of the strict relations i < j given as pairs."""
    if n < 0:
        raise ValueError("n must be non-negative")
    up = [0] * n
    for i, j in rels:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"relation ({i}, {j}) out of range for n={n}")
        if i == j:
            raise CycleError(f"relation {i} < {i}")
        up[i] |= 1 << j
    # Warshall on bitmasks
    for k in range(n):
        kb = 1 << k
        uk = up[k]
        for i in range(n):
            if up[i] & kb:
                up[i] |= uk
    for i in range(n):
        if up[i] >> i & 1:
            raise CycleError(f"relations force {i} < {i}")
    return _from_masks(n, up)


def invert(o: FiniteOrder) -> FiniteOrder:
    return _from_masks(o.n, [o.down(i) for i in range(o.n)])


def induced(o: FiniteOrder, subset: Sequence[int]) -> FiniteOrder:
    """Suborder on subset; index k of the result is subset[k]."""
    subset = list(subset)
    for i in subset:
        if not 0 <= i < o.n:
            raise IndexError(f"element {i} out of range")
    if len(set(subset)) != len(subset):
        raise DuplicateError("induced subset has repeated elements")
    cmp = o.cmp
    return FiniteOrder([[cmp[a][b] for b in subset] for a in subset], check=False)


def permute(o: FiniteOrder, perm: Sequence[int]) -> FiniteOrder:
    """Relabel: element i of o becomes element perm[i] of the result."""
    n = o.n
    table = [[INC] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[perm[i]][perm[j]] = o.cmp[i][j]
    return FiniteOrder(table, check=False)


def connected_components(o: FiniteOrder) -> list[list[int]]:
    """Components of the comparability graph, each sorted, ordered by least element."""
    seen = 0
    comps = []
    for s in range(o.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= o.down(x) | o.up(x)
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


@dataclass(frozen=True)
class LevelDecomposition:
    level: tuple[int, ...]
    height: int

    def members(self, lv: int) -> list[int]:
        return [i for i, l in enumerate(self.level) if l == lv]

    def groups(self) -> list[list[int]]:
        out = [[] for _ in range(self.height)]
        for i, l in enumerate(self.level):
            out[l].append(i)
        return out

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups())


def linear_extension(o: FiniteOrder) -> list[int]:
    """Some linear extension; sorting by down-set size is enough since
    x < y implies down(x) is a proper subset of down(y)."""
    return sorted(range(o.n), key=lambda i: (o.down(i).bit_count(), i))


def _longest_below(o: FiniteOrder) -> list[int]:
    lv = [0] * o.n
    for x in linear_extension(o):
        best = 0
        for y in bits(o.down(x)):
            if lv[y] + 1 > best:
                best = lv[y] + 1
        lv[x] = best
    return lv


def _longest_above(o: FiniteOrder) -> list[int]:
    lv = [0] * o.n
    for x in reversed(linear_extension(o)):
        best = 0
        for y in bits(o.up(x)):
            if lv[y] + 1 > best:
                best = lv[y] + 1
        lv[x] = best
    return lv


def levels(o: FiniteOrder) -> LevelDecomposition:
    lv = _longest_below(o)
    return LevelDecomposition(tuple(lv), (max(lv) + 1) if lv else 0)


def height(o: FiniteOrder) -> int:
    return levels(o).height


def cover_pairs(o: FiniteOrder) -> list[tuple[int, int]]:
    """Pairs (low, high) with low < high and nothing strictly in between."""
    out = []
    for low in range(o.n):
        above = o.up(low)
        for high in bits(above):
            if not (o.down(high) & above):
                out.append((low, high))
    return out


def height_below_above(o: FiniteOrder, x: int) -> tuple[int, int]:
    if not 0 <= x < o.n:
        raise IndexError(f"element {x} out of range")
    return _longest_below(o)[x], _longest_above(o)[x]


def on_maximum_chain(o: FiniteOrder) -> list[int]:
    """Elements lying on some maximum chain."""
    below = _longest_below(o)
    above = _longest_above(o)
    h = max(below) + 1 if below else 0
    return [x for x in range(o.n) if below[x] + above[x] + 1 == h]
