"""Exact counts of linear extensions.

Specialised counters exist for trunks, cedars, series-parallel orders and
orders with several components; ``count_bruteforce`` is the independent
reference used to check all of them.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotCedarError, NotSeriesParallelError, SizeError
from .order import FiniteOrder, bits, connected_components, induced, levels
from .recognition import (SPTree, is_cedar, is_trunk, rmf_trunk, sp_decompose,
                          trunk_profile)

BRUTE_CAP = 11


@lru_cache(maxsize=None)
def fusion(p: int, q: int) -> int:
    """Ways to interleave a p-chain with a q-chain."""
    if p < 0 or q < 0:
        raise ValueError("fusion arguments must be non-negative")
    if q > p:
        p, q = q, p
    if q == 0:
        return 1
    if q == 1:
        return p + 1
    return sum(fusion(p - i, q - 2) * (i + 1) for i in range(p + 1))


def count_trunk(profile: Sequence[int]) -> int:
    out = 1
    for t in profile:
        out *= math.factorial(t)
    return out


def count_disconnected(components: Iterable[tuple[int, int]]) -> int:
    """Combine (count, size) pairs of the connected components."""
    total, seen = 1, 0
    for cnt, size in components:
        total *= cnt
        if seen:
            total *= fusion(seen, size)
        seen += size
    return total


def count_bruteforce(o: FiniteOrder, cap: int = BRUTE_CAP) -> int:
    """Remove minimal elements one at a time, memoized on the remaining set."""
    if o.n > cap:
        raise SizeError(f"brute-force counting capped at n={cap}, got {o.n}")
    down = [o.down(x) for x in range(o.n)]

    @lru_cache(maxsize=None)
    def rec(rest):
        if rest == 0:
            return 1
        total = 0
        for x in bits(rest):
            if not (down[x] & rest):
                total += rec(rest & ~(1 << x))
        return total

    return rec((1 << o.n) - 1)


def cedar_table(o: FiniteOrder) -> dict:
    """Final state table of the cedar dynamic program.

    Elements are inserted level by level into a growing linear extension
    of the already inserted ones.  A state (j1, j2) records the highest
    position of a trunk element on levels below the current one (j1) and on
    levels up to the current one (j2); -1 means none.  Only trunk positions
    matter because outside elements bound nothing that comes later.
    """
    if not is_cedar(o):
        raise NotCedarError("order is not a cedar")
    trunk = rmf_trunk(o)
    lv = levels(o).level
    order = sorted(range(o.n), key=lambda x: (lv[x], x not in trunk, x))
    table = {(-1, -1): 1}
    cur = 0
    for i, x in enumerate(order):  # i elements already placed, gaps 0..i
        new = {}
        nxt_level = lv[x] != cur
        if nxt_level:
            assert lv[x] == cur + 1
            cur = lv[x]
        for (j1, j2), c in table.items():
            if nxt_level:
                j1 = j2  # everything placed so far lies on lower levels
            if x in trunk:
                # any gap above j1; the new trunk maximum moves accordingly
                if j2 > j1:
                    key = (j1, j2 + 1)
                    new[key] = new.get(key, 0) + c * (j2 - j1)
                for g in range(j2 + 1, i + 1):
                    key = (j1, g)
                    new[key] = new.get(key, 0) + c
            else:
                # any gap above j1; gaps below j2 shift the trunk maximum
                if i - j2 > 0:
                    new[(j1, j2)] = new.get((j1, j2), 0) + c * (i - j2)
                if j2 > j1:
                    key = (j1, j2 + 1)
                    new[key] = new.get(key, 0) + c * (j2 - j1)
        table = new
    return table


def count_cedar(o: FiniteOrder) -> int:
    return sum(cedar_table(o).values())


def count_sp_tree(t: SPTree) -> int:
    if t.kind == "leaf":
        return 1
    counts = [count_sp_tree(c) for c in t.children]
    total = 1
    for c in counts:
        total *= c
    if t.kind == "parallel":
        total *= count_disconnected((1, c.size) for c in t.children)
    return total


def count_sp(o: FiniteOrder) -> int:
    return count_sp_tree(sp_decompose(o))


def count_with_method(o: FiniteOrder, cap: int = BRUTE_CAP) -> tuple[int, str]:
    """Count via the first applicable method: trunk, cedar, SP, components, brute."""
    if o.n == 0:
        return 1, "trunk"
    if is_trunk(o):
        return count_trunk(trunk_profile(o)), "trunk"
    if is_cedar(o):
        return count_cedar(o), "cedar"
    try:
        return count_sp(o), "sp"
    except NotSeriesParallelError:
        pass
    comps = connected_components(o)
    if len(comps) > 1:
        parts = []
        for comp in comps:
            c, _ = count_with_method(induced(o, comp), cap)
            parts.append((c, len(comp)))
        return count_disconnected(parts), "components"
    return count_bruteforce(o, cap), "brute"


def count_auto(o: FiniteOrder, cap: int = BRUTE_CAP) -> int:
    return count_with_method(o, cap)[0]
