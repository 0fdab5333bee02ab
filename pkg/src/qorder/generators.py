"""Deterministic families and seeded random generators of finite orders."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional, Sequence

from .errors import ParamError
from .order import FiniteOrder, bits, from_relations, permute
from .structures import AdjacencyStructure


def chain(n: int) -> FiniteOrder:
    return FiniteOrder.chain(n)


def antichain(n: int) -> FiniteOrder:
    return FiniteOrder.antichain(n)


def trunk_order(profile: Sequence[int]) -> FiniteOrder:
    """Weak order whose level i has profile[i] elements (numbered level by level)."""
    if any(t < 1 for t in profile):
        raise ParamError("trunk levels must be nonempty")
    groups, k = [], 0
    for t in profile:
        groups.append(range(k, k + t))
        k += t
    rels = [(x, y) for a, b in zip(groups, groups[1:]) for x in a for y in b]
    return from_relations(k, rels)


def cedar_order(profile: Sequence[int], labels: Sequence[int]) -> FiniteOrder:
    """Trunk with the given profile plus one outside element per label.

    An outside element with label l sits above every trunk level < l and is
    incomparable with everything else.  Labels must be at most height - 2 so
    that the element stays off the maximum chains.
    """
    h = len(profile)
    if any(not 0 <= l <= h - 2 for l in labels):
        raise ParamError("cedar labels must lie in 0..height-2")
    t = sum(profile)
    starts = list(itertools.accumulate([0] + list(profile)))
    rels = list(trunk_order(profile).relations())
    for k, l in enumerate(labels):
        x = t + k
        rels.extend((y, x) for y in range(starts[l]))
    return from_relations(t + len(labels), rels)


def disjoint_union(orders: Sequence[FiniteOrder]) -> FiniteOrder:
    rels, off = [], 0
    for o in orders:
        rels.extend((i + off, j + off) for i, j in o.relations())
        off += o.n
    return from_relations(off, rels)


def zigzag(m: int) -> FiniteOrder:
    """s_i = i and s'_i = m + i with s_i < s'_i and s_i < s'_{i+1}."""
    if m < 1:
        raise ParamError("zigzag needs m >= 1")
    rels = [(i, m + i) for i in range(m)] + [(i, m + i + 1) for i in range(m - 1)]
    return from_relations(2 * m, rels)


def woodpecker_pairs(k: int) -> list[tuple[int, int]]:
    return [(i, s) for i in range(k) for s in range(i + 2, k)]


def trunk_with_woodpeckers(k: int) -> FiniteOrder:
    """Chain t_0..t_{k-1} (elements 0..k-1) plus a woodpecker for each (i, s)
    with i + 2 <= s, above t_0..t_i and below t_s..t_{k-1}.

    Woodpeckers get no relation of their own; the transitive closure orders
    wp(i, s) below wp(i', s') whenever s <= i'.
    """
    if k < 4:
        raise ParamError("trunk_with_woodpeckers needs k >= 4")
    rels = [(j, j + 1) for j in range(k - 1)]
    for w, (i, s) in enumerate(woodpecker_pairs(k)):
        x = k + w
        rels.append((i, x))
        rels.append((x, s))
    return from_relations(k + len(woodpecker_pairs(k)), rels)


def pmrh(i: int) -> FiniteOrder:
    """The family showing the height-halving bound is tight.

    Step 0 has the chain r01<r02<r03<r04 and x01<x03 hooked to it; each
    later step adds r_{j,3} < r_{j,4} on top of the chain and x_{j,3} on top
    of the x chain.  Use :func:`pmrh_names` for element names.
    """
    if i < 0:
        raise ParamError("pmrh needs i >= 0")
    names = pmrh_names(i)
    idx = {nm: k for k, nm in enumerate(names)}
    rels = [("r0.1", "r0.2"), ("r0.2", "r0.3"), ("r0.3", "r0.4"),
            ("x0.1", "x0.3"), ("x0.1", "r0.3"), ("x0.1", "r0.4"),
            ("r0.1", "x0.3"), ("r0.2", "x0.3")]
    for j in range(1, i + 1):
        rels += [(f"r{j}.3", f"r{j}.4"), (f"r{j-1}.4", f"r{j}.3"),
                 (f"x{j-1}.3", f"x{j}.3"), (f"x{j-1}.3", f"r{j}.3"),
                 (f"r{j-1}.4", f"x{j}.3")]
    return from_relations(len(names), [(idx[a], idx[b]) for a, b in rels])


def pmrh_names(i: int) -> list[str]:
    names = ["r0.1", "r0.2", "r0.3", "r0.4", "x0.1", "x0.3"]
    for j in range(1, i + 1):
        names += [f"r{j}.3", f"r{j}.4", f"x{j}.3"]
    return names


def pmrh_trunk(i: int) -> list[int]:
    return [k for k, nm in enumerate(pmrh_names(i)) if nm.startswith("r")]


def groups_order(i: int) -> FiniteOrder:
    """Chain t_1..t_i with pendants: u_j above t_j (j < i) and d_s below t_s
    (s >= 2).  This is TW_{i+2} without its extreme chain elements and keeping
    only woodpeckers with exactly one leg on them."""
    if i < 2:
        raise ParamError("groups_order needs i >= 2")
    t = list(range(i))                    # t_1..t_i
    u = list(range(i, 2 * i - 1))         # u_1..u_{i-1}
    d = list(range(2 * i - 1, 3 * i - 2))  # d_2..d_i
    rels = [(t[j], t[j + 1]) for j in range(i - 1)]
    rels += [(t[j], u[j]) for j in range(i - 1)]
    rels += [(d[s - 1], t[s]) for s in range(1, i)]
    return from_relations(3 * i - 2, rels)


def grid(p: int, q: int) -> AdjacencyStructure:
    """p x q grid graph; vertex (r, c) has index r * q + c."""
    if p < 1 or q < 1:
        raise ParamError("grid needs p, q >= 1")
    edges = []
    for r in range(p):
        for c in range(q):
            v = r * q + c
            if c + 1 < q:
                edges.append((v, v + 1))
            if r + 1 < p:
                edges.append((v, v + q))
    return AdjacencyStructure.graph(p * q, edges)


# random generators

def _rng(seed) -> random.Random:
    return random.Random(seed)


def _shuffled(o: FiniteOrder, rng: random.Random) -> FiniteOrder:
    perm = list(range(o.n))
    rng.shuffle(perm)
    return permute(o, perm)


def _check_n(n):
    if n < 1:
        raise ParamError("n must be >= 1")


def random_trunk(n: int, seed=None) -> FiniteOrder:
    _check_n(n)
    rng = _rng(seed)
    profile, cur = [], 1
    for _ in range(n - 1):
        if rng.random() < 0.5:
            profile.append(cur)
            cur = 1
        else:
            cur += 1
    profile.append(cur)
    return _shuffled(trunk_order(profile), rng)


def _random_sp_rels(m, rng, itov, start, rels):
    """Relations of a random SP order on start..start+m-1."""
    if m == 1:
        return
    if rng.random() < 0.5:
        k = rng.randint(1, m - 1)
        _random_sp_rels(k, rng, itov, start, rels)
        _random_sp_rels(m - k, rng, itov, start + k, rels)
        rels.extend((x, y) for x in range(start, start + k) for y in range(start + k, start + m))
    elif itov:
        # parallel with one arbitrary part and singletons
        s = rng.randint(1, m - 1)
        _random_sp_rels(s, rng, itov, start, rels)
    else:
        k = rng.randint(1, m - 1)
        _random_sp_rels(k, rng, itov, start, rels)
        _random_sp_rels(m - k, rng, itov, start + k, rels)


def random_sp(n: int, seed=None) -> FiniteOrder:
    _check_n(n)
    rng = _rng(seed)
    rels = []
    _random_sp_rels(n, rng, False, 0, rels)
    return _shuffled(from_relations(n, rels), rng)


def random_itov(n: int, seed=None) -> FiniteOrder:
    _check_n(n)
    rng = _rng(seed)
    rels = []
    _random_sp_rels(n, rng, True, 0, rels)
    return _shuffled(from_relations(n, rels), rng)


def random_cedar(n: int, seed=None) -> FiniteOrder:
    _check_n(n)
    rng = _rng(seed)
    t = rng.randint(1, n)
    h = rng.randint(1, t)
    if h < 2:
        t = n
    # split t trunk elements into h nonempty levels
    cuts = sorted(rng.sample(range(1, t), h - 1)) if h > 1 else []
    profile = [b - a for a, b in zip([0] + cuts, cuts + [t])]
    labels = [rng.randint(0, h - 2) for _ in range(n - t)] if h >= 2 else []
    return _shuffled(cedar_order(profile, labels), rng)


def random_order(n: int, density: float = 0.3, seed=None) -> FiniteOrder:
    _check_n(n)
    if not 0.0 <= density <= 1.0:
        raise ParamError("density must lie in [0, 1]")
    rng = _rng(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    rels = [(perm[a], perm[b]) for a in range(n) for b in range(a + 1, n)
            if rng.random() < density]
    return from_relations(n, rels)


def random_up_regular(n: int, seed=None) -> FiniteOrder:
    """Random up-regular order.

    In an up-regular order all elements of a level share one down-set, so
    the order is fixed by choosing, per level, a down-closed set of lower
    elements that meets the level just below.
    """
    _check_n(n)
    rng = _rng(seed)
    profile, cur = [], 1
    for _ in range(n - 1):
        if rng.random() < 0.45:
            profile.append(cur)
            cur = 1
        else:
            cur += 1
    profile.append(cur)
    groups, k = [], 0
    for t in profile:
        groups.append(list(range(k, k + t)))
        k += t
    below = [0] * n  # strict down-set masks
    for L in range(1, len(groups)):
        pick = 1 << rng.choice(groups[L - 1])
        for lower in groups[:L]:
            for x in lower:
                if rng.random() < 0.5:
                    pick |= 1 << x
        closed = pick
        for x in bits(pick):
            closed |= below[x]
        for y in groups[L]:
            below[y] = closed
    rels = [(x, y) for y in range(n) for x in bits(below[y])]
    return _shuffled(from_relations(n, rels), rng)


def random_disconnected(n: int, seed=None, parts: Optional[int] = None) -> FiniteOrder:
    """Disjoint union of random connected-ish orders, shuffled."""
    if n < 2:
        raise ParamError("need n >= 2 for several components")
    rng = _rng(seed)
    k = parts or rng.randint(2, min(4, n))
    cuts = sorted(rng.sample(range(1, n), k - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    comps = [random_order(s, rng.uniform(0.3, 0.9), rng.random()) for s in sizes]
    return _shuffled(disjoint_union(comps), rng)


# exhaustive enumeration

def canonical_key(o: FiniteOrder) -> tuple:
    """Lexicographically least LT-table over all relabelings (small n only)."""
    n = o.n
    best = None
    rels = o.relations()
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[i], perm[j]) for i, j in rels))
        if best is None or key < best:
            best = key
    return (n, best)


def all_posets(n: int) -> Iterator[FiniteOrder]:
    """One representative per isomorphism class of posets on n elements.

    Every poset arises from one on n-1 elements by adding a maximal element
    above some down-closed set; duplicates are removed by canonical keys.
    """
    if not 0 <= n <= 6:
        raise ParamError("all_posets is limited to n <= 6")
    layer = {canonical_key(FiniteOrder.antichain(0)): FiniteOrder.antichain(0)}
    for m in range(n):
        nxt = {}
        for o in layer.values():
            for sub in range(1 << m):
                if any(o.down(x) & ~sub for x in bits(sub)):
                    continue  # not down-closed
                rels = o.relations() + [(x, m) for x in bits(sub)]
                p = from_relations(m + 1, rels)
                key = canonical_key(p)
                if key not in nxt:
                    nxt[key] = p
        layer = nxt
    yield from (layer[k] for k in sorted(layer))


def all_posets_upto(n: int) -> Iterator[FiniteOrder]:
    for m in range(1, n + 1):
        yield from all_posets(m)
