"""Isomorphism tests: trunk profiles, up-regular labels, and a backtracking oracle."""

from __future__ import annotations

from typing import Sequence

from .errors import NotUpRegularError, SizeError
from .order import FiniteOrder, bits, levels
from .recognition import is_up_regular

ISO_CAP = 8


def iso_trunk(a: Sequence[int], b: Sequence[int]) -> bool:
    return tuple(a) == tuple(b)


def up_regular_labels(o: FiniteOrder) -> list[list[int]]:
    """Per level, the sorted labels of its elements.

    The label of x is the least level whose elements are all above x, or
    the height when nothing is above x.
    """
    if not is_up_regular(o):
        raise NotUpRegularError("order is not up-regular")
    dec = levels(o)
    lv = dec.level
    out = [[] for _ in range(dec.height)]
    for x in range(o.n):
        above = [lv[y] for y in bits(o.up(x))]
        out[lv[x]].append(min(above) if above else dec.height)
    return [sorted(g) for g in out]


def iso_up_regular(a: FiniteOrder, b: FiniteOrder) -> bool:
    return a.n == b.n and up_regular_labels(a) == up_regular_labels(b)


def find_isomorphism(a: FiniteOrder, b: FiniteOrder, cap: int = ISO_CAP):
    """Mapping f (list) with a.cmp[i][j] == b.cmp[f[i]][f[j]], or None."""
    if a.n != b.n:
        return None
    if a.n > cap:
        raise SizeError(f"brute-force isomorphism capped at n={cap}, got {a.n}")
    la, lb = levels(a).level, levels(b).level

    def sig(o, lv, x):
        return (lv[x], o.down(x).bit_count(), o.up(x).bit_count())

    sa = [sig(a, la, x) for x in range(a.n)]
    sb = [sig(b, lb, y) for y in range(b.n)]
    if sorted(sa) != sorted(sb):
        return None
    n = a.n
    f = [-1] * n
    used = [False] * n
    order = sorted(range(n), key=lambda x: sa[x])

    def rec(k):
        if k == n:
            return True
        x = order[k]
        for y in range(n):
            if used[y] or sb[y] != sa[x]:
                continue
            if all(a.cmp[x][order[s]] == b.cmp[y][f[order[s]]] for s in range(k)):
                f[x] = y
                used[y] = True
                if rec(k + 1):
                    return True
                used[y] = False
        f[x] = -1
        return False

    return list(f) if rec(0) else None


def iso_bruteforce(a: FiniteOrder, b: FiniteOrder, cap: int = ISO_CAP) -> bool:
    return find_isomorphism(a, b, cap) is not None
