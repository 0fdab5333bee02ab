"""Class membership tests and structural extractors for finite orders."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import (EmptyOrderError, NotItovError, NotSeriesParallelError,
                     NotTrunkError, ValidationError)
from .order import (EQ, INC, LT, FiniteOrder, bits, from_relations, induced,
                    levels, mask_of, on_maximum_chain)

OBS1_ORDER = from_relations(4, [(0, 1), (2, 3)])
OBS2_ORDER = from_relations(4, [(0, 1), (2, 3), (2, 1)])
OBST_ORDER = from_relations(3, [(0, 1)])


class ObstructionPattern(Enum):
    OBS1 = "obs1"
    OBS2 = "obs2"
    OBST = "obst"

    @property
    def order(self) -> FiniteOrder:
        return {"obs1": OBS1_ORDER, "obs2": OBS2_ORDER, "obst": OBST_ORDER}[self.value]


OBS1, OBS2, OBST = ObstructionPattern.OBS1, ObstructionPattern.OBS2, ObstructionPattern.OBST


def _ident(r):
    # equality counts as incomparability when comparing relation profiles
    return INC if r == EQ else r


def find_obstruction(o: FiniteOrder, p, accept=None) -> Optional[tuple]:
    """Tuple w with induced(o, w) equal to the pattern (pattern element i -> w[i]).

    Exhaustive backtracking over injective assignments.  ``accept`` may
    reject complete witnesses, which makes this usable for restricted
    searches.
    """
    pat = p.order if isinstance(p, ObstructionPattern) else p
    k = pat.n
    cmp = o.cmp
    chosen = []

    def extend():
        t = len(chosen)
        if t == k:
            w = tuple(chosen)
            return w if accept is None or accept(w) else None
        for x in range(o.n):
            if x in chosen:
                continue
            if all(cmp[chosen[s]][x] == pat.cmp[s][t] for s in range(t)):
                chosen.append(x)
                r = extend()
                chosen.pop()
                if r is not None:
                    return r
        return None

    return extend()


def is_itov_fast(o: FiniteOrder) -> bool:
    """Every incomparable pair has nested directed neighbourhoods.

    For each incomparable pair the third elements are scanned once,
    keeping a state among equality / advantage to x / advantage to y.
    """
    cmp = o.cmp
    n = o.n
    for x in range(n):
        rx = cmp[x]
        for y in range(x + 1, n):
            if rx[y] != INC:
                continue
            ry = cmp[y]
            state = 0  # 0 equality, 1 advantage x, 2 advantage y
            for z in range(n):
                if z == x or z == y:
                    continue
                a, b = rx[z], ry[z]
                if a == b:
                    continue
                if b == INC:
                    adv = 1  # z relates to x only
                elif a == INC:
                    adv = 2
                else:
                    # z below one and above the other: impossible for x ~ y
                    return False
                if state == 0:
                    state = adv
                elif state != adv:
                    return False
    return True


def is_itov_obstruction(o: FiniteOrder) -> bool:
    """Reference test: no induced OBS1 and no induced OBS2."""
    return find_obstruction(o, OBS1) is None and find_obstruction(o, OBS2) is None


def is_trunk(o: FiniteOrder) -> bool:
    """Incomparability is transitive, i.e. elements on lower levels are below
    everything on higher levels."""
    lv = levels(o).level
    cmp = o.cmp
    n = o.n
    for i in range(n):
        for j in range(n):
            if lv[i] < lv[j] and cmp[i][j] != LT:
                return False
    return True


def trunk_profile(o: FiniteOrder) -> tuple[int, ...]:
    if not is_trunk(o):
        raise NotTrunkError("order is not a trunk")
    return levels(o).sizes()


def neighbourhood_order(o: FiniteOrder) -> FiniteOrder:
    """x < y iff down(x) and up(x) are contained in down(y) and up(y),
    with at least one inclusion strict."""
    rels = []
    for x in range(o.n):
        dx, ux = o.down(x), o.up(x)
        for y in range(o.n):
            if x == y:
                continue
            dy, uy = o.down(y), o.up(y)
            if dx & ~dy or ux & ~uy:
                continue
            if dx != dy or ux != uy:
                rels.append((x, y))
    return from_relations(o.n, rels)


def rmf_trunk(o: FiniteOrder) -> Optional[frozenset]:
    """Union of the maximum chains when it induces a trunk, else None."""
    if o.n == 0:
        raise EmptyOrderError("rmf_trunk needs a nonempty order")
    u = on_maximum_chain(o)
    if is_trunk(induced(o, u)):
        return frozenset(u)
    return None


def is_up_regular(o: FiniteOrder) -> bool:
    """Each element is below all or none of every level above its own."""
    dec = levels(o)
    sizes = dec.sizes()
    lv = dec.level
    for x in range(o.n):
        count = [0] * dec.height
        for y in bits(o.up(x)):
            count[lv[y]] += 1
        for L in range(lv[x] + 1, dec.height):
            if count[L] not in (0, sizes[L]):
                return False
    return True


def is_regular_to_trunk(o: FiniteOrder, x: int, trunk: Iterable[int]) -> bool:
    members = sorted(trunk)
    t = induced(o, members)
    if not is_trunk(t):
        raise NotTrunkError("given element set does not induce a trunk")
    tl = levels(t).groups()
    for group in tl:
        rels = {_ident(o.rel(x, members[k])) for k in group}
        if len(rels) > 1:
            return False
    return True


@dataclass(frozen=True)
class ItovDecomposition:
    trunk: frozenset
    rest_elements: tuple
    rest: FiniteOrder


def decompose_itov(o: FiniteOrder) -> ItovDecomposition:
    """Split an itov order into its relatively maximum full trunk and the rest,
    asserting the four clauses of the decomposition."""
    if not is_itov_fast(o):
        raise NotItovError("order is not itov")
    trunk = rmf_trunk(o)
    if trunk is None:
        raise ValidationError("itov order without a relatively maximum full trunk")
    rest_el = tuple(x for x in range(o.n) if x not in trunk)
    rest = induced(o, rest_el)
    for x in rest_el:
        if not is_regular_to_trunk(o, x, trunk):
            raise ValidationError(f"element {x} is not regular to the trunk")
    if not is_itov_fast(rest):
        raise ValidationError("rest of the decomposition is not itov")
    outside = set(rest_el)

    def mixed(w):
        k = sum(1 for e in w if e in outside)
        return k >= 2 and k < len(w)

    for pat in (OBS1, OBS2):
        if find_obstruction(o, pat, accept=mixed) is not None:
            raise ValidationError("mixed obstruction across trunk and rest")
    return ItovDecomposition(trunk, rest_el, rest)


def is_cedar(o: FiniteOrder) -> bool:
    if o.n == 0 or not is_itov_fast(o):
        return False
    trunk = rmf_trunk(o)
    if trunk is None:
        return False
    out = [x for x in range(o.n) if x not in trunk]
    tmask = mask_of(trunk)
    for x in out:
        if o.up(x) & tmask:
            return False
        for y in out:
            if o.comparable(x, y):
                return False
    return True


# series-parallel decomposition

@dataclass(frozen=True)
class SPTree:
    kind: str  # "leaf", "series" (children bottom to top) or "parallel"
    children: tuple = ()
    element: Optional[int] = None
    size: int = 1

    @staticmethod
    def leaf(x: int) -> "SPTree":
        return SPTree("leaf", (), x, 1)

    @staticmethod
    def node(kind: str, children: Sequence["SPTree"]) -> "SPTree":
        children = tuple(children)
        return SPTree(kind, children, None, sum(c.size for c in children))

    def elements(self) -> list[int]:
        if self.kind == "leaf":
            return [self.element]
        out = []
        for c in self.children:
            out.extend(c.elements())
        return out

    def depth(self) -> int:
        if self.kind == "leaf":
            return 0
        return 1 + max(c.depth() for c in self.children)

    def __str__(self):
        if self.kind == "leaf":
            return str(self.element)
        tag = "S" if self.kind == "series" else "P"
        return tag + "(" + ", ".join(str(c) for c in self.children) + ")"


def evaluate_sp(tree: SPTree, n: Optional[int] = None) -> FiniteOrder:
    """Order described by an SP tree (series layers + parallel unions)."""
    els = tree.elements()
    if n is None:
        n = max(els) + 1
    rels = []

    def walk(t):
        if t.kind == "series":
            groups = [c.elements() for c in t.children]
            for a, b in zip(groups, groups[1:]):
                rels.extend((x, y) for x in a for y in b)
        for c in t.children:
            walk(c)

    walk(tree)
    return from_relations(n, rels)


def _components_in(o: FiniteOrder, mask: int, comparable: bool) -> list[int]:
    comps = []
    left = mask
    while left:
        s = left & -left
        comp = s
        frontier = s
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nb = o.down(x) | o.up(x)
                if not comparable:
                    nb = ~nb & ~(1 << x)
                nxt |= nb
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def sp_decompose(o: FiniteOrder) -> SPTree:
    if o.n == 0:
        raise EmptyOrderError("sp_decompose needs a nonempty order")

    def fail(mask):
        sub = list(bits(mask))
        w = find_obstruction(induced(o, sub), OBS2)
        witness = tuple(sub[i] for i in w) if w is not None else None
        raise NotSeriesParallelError(f"order contains O_obs2 at {witness}", witness)

    def rec(mask):
        if mask & (mask - 1) == 0:
            return SPTree.leaf(mask.bit_length() - 1)
        comps = _components_in(o, mask, True)
        if len(comps) > 1:
            return SPTree.node("parallel", [rec(c) for c in comps])
        layers = _components_in(o, mask, False)
        if len(layers) == 1:
            fail(mask)
        reps = {c: (c & -c).bit_length() - 1 for c in layers}

        def by_rep(a, b):
            return -1 if o.lt(reps[a], reps[b]) else 1

        layers.sort(key=functools.cmp_to_key(by_rep))
        for lo, hi in zip(layers, layers[1:]):
            for x in bits(lo):
                if hi & ~o.up(x):
                    fail(mask)
        return SPTree.node("series", [rec(c) for c in layers])

    return rec((1 << o.n) - 1)


def is_series_parallel(o: FiniteOrder) -> bool:
    try:
        sp_decompose(o)
    except NotSeriesParallelError:
        return False
    return True


def forced_equal_closure(o: FiniteOrder, seed: tuple[int, int]) -> frozenset:
    """Least set containing the seed and closed under: z joins when it
    relates differently to two members."""
    x, y = seed
    if x == y:
        raise ValueError("seed elements must be distinct")
    cls = {x, y}
    changed = True
    while changed:
        changed = False
        for z in range(o.n):
            if z in cls:
                continue
            rels = {_ident(o.rel(z, a)) for a in cls}
            if len(rels) > 1:
                cls.add(z)
                changed = True
    return frozenset(cls)


CLASS_NAMES = ("trunk", "itov", "sp", "up-regular", "cedar", "obs1-free", "obs2-free")


def classify(o: FiniteOrder, which: Optional[Sequence[str]] = None) -> list[tuple[str, bool, str]]:
    """(class, member?, detail) rows for the requested classes."""
    which = list(which or CLASS_NAMES)
    rows = []
    for name in which:
        detail = ""
        if name == "trunk":
            ok = is_trunk(o)
            if ok:
                detail = "profile=" + ",".join(map(str, trunk_profile(o)))
            else:
                detail = "obst=" + _fmt(find_obstruction(o, OBST))
        elif name == "itov":
            ok = is_itov_fast(o)
            if not ok:
                w1 = find_obstruction(o, OBS1)
                detail = "obs1=" + _fmt(w1) if w1 else "obs2=" + _fmt(find_obstruction(o, OBS2))
        elif name == "sp":
            try:
                t = sp_decompose(o)
                ok, detail = True, "tree=" + str(t).replace(" ", "")
            except NotSeriesParallelError as e:
                ok, detail = False, "obs2=" + _fmt(e.witness)
        elif name == "up-regular":
            ok = is_up_regular(o)
        elif name == "cedar":
            ok = is_cedar(o)
        elif name == "obs1-free":
            w = find_obstruction(o, OBS1)
            ok = w is None
            detail = "" if ok else "obs1=" + _fmt(w)
        elif name == "obs2-free":
            w = find_obstruction(o, OBS2)
            ok = w is None
            detail = "" if ok else "obs2=" + _fmt(w)
        else:
            raise ValueError(f"unknown class {name!r}")
        rows.append((name, ok, detail))
    return rows


def _fmt(w):
    return "-" if w is None else ",".join(map(str, w))
