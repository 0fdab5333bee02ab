"""Constructions of questionable representations.

* ``build_total_strict_binary``: strict binary words for total orders,
  inserting elements one at a time below a virtual top.
* ``build_itov_total_binary``: two bits per earlier element, following a
  linear extension of the neighbourhood order.
* ``build_width2``: words read off a series-parallel decomposition, with
  ranks alternating between a two-digit chain and two incomparable digits.
* ``strictify`` and ``prefix_components`` transform existing representations.
"""

from __future__ import annotations

import heapq
import math
import random
from typing import Optional, Sequence

from .errors import NotItovError, NotTotalError, ValidationError
from .order import FiniteOrder, bits, connected_components, induced
from .recognition import SPTree, is_itov_fast, neighbourhood_order, sp_decompose
from .words import (ANTI2, TOTAL2, OrderSequence, QuestionableRepresentation,
                    validate_qrep)

TOP = "top"


def build_total_strict_binary(o: FiniteOrder, insertion: Optional[Sequence[int]] = None
                              ) -> QuestionableRepresentation:
    if not o.is_total():
        raise NotTotalError("order is not total")
    n = o.n
    insertion = list(range(n)) if insertion is None else list(insertion)
    if sorted(insertion) != list(range(n)):
        raise ValueError("insertion must be a permutation of the elements")
    words = {TOP: [1]}
    for x in insertion:
        if len(words) == 1:
            words[x] = [0] * len(words[TOP])
            continue
        placed = [y for y in words if y != TOP]
        up = [y for y in placed if o.lt(x, y)] + [TOP]
        down = [y for y in placed if o.lt(y, x)]
        w = [min(d) for d in zip(*(words[y] for y in up))]
        equal = [y for y in words if words[y] == w]
        if equal:
            (twin,) = equal
            for y in down:
                words[y].append(0)
            for y in up:
                words[y].append(1)
            w.append(1 if twin in down else 0)
        words[x] = w
    return QuestionableRepresentation(OrderSequence.uniform(TOTAL2),
                                      tuple(tuple(words[i]) for i in range(n)))


def build_itov_total_binary(o: FiniteOrder) -> QuestionableRepresentation:
    if not is_itov_fast(o):
        raise NotItovError("order is not itov")
    nb = neighbourhood_order(o)
    # linear extension of the neighbourhood order, smallest index first
    indeg = [nb.down(x).bit_count() for x in range(o.n)]
    heap = [x for x in range(o.n) if indeg[x] == 0]
    heapq.heapify(heap)
    ranked = []
    while heap:
        x = heapq.heappop(heap)
        ranked.append(x)
        for y in bits(nb.up(x)):
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    words = [None] * o.n
    for i, x in enumerate(ranked):
        w = []
        for e in ranked[:i]:
            if o.lt(x, e):
                w += [0, 0]
            elif o.lt(e, x):
                w += [1, 1]
            else:
                w += [1, 0]
        words[x] = tuple(w + [1, 0])
    return QuestionableRepresentation(OrderSequence.uniform(TOTAL2), tuple(words), 2)


def _split_balanced(children: Sequence[SPTree]) -> int:
    total = sum(c.size for c in children)
    best, best_k, acc = None, 1, 0
    for k in range(1, len(children)):
        acc += children[k - 1].size
        gap = abs(2 * acc - total)
        if best is None or gap < best:
            best, best_k = gap, k
    return best_k


def width2_from_tree(tree: SPTree, n: int) -> QuestionableRepresentation:
    if tree.kind == "leaf":
        words = [None] * n
        words[tree.element] = (0,)
        return QuestionableRepresentation(OrderSequence((TOTAL2,)), tuple(words))
    root_kind = tree.kind
    other = "parallel" if root_kind == "series" else "series"

    def kind_at(r):
        return root_kind if r % 2 == 0 else other

    words = [None] * n

    def place(t, r, prefix):
        if t.kind == "leaf":
            words[t.element] = tuple(prefix)
        else:
            split(t.kind, list(t.children), r, prefix)

    def split(kind, children, r, prefix):
        if kind_at(r) != kind:
            prefix = prefix + [0]  # padding digit shared by the whole group
            r += 1
        k = _split_balanced(children)
        for digit, group in enumerate((children[:k], children[k:])):
            if len(group) == 1:
                place(group[0], r + 1, prefix + [digit])
            else:
                split(kind, group, r + 1, prefix + [digit])

    place(tree, 0, [])
    length = max(len(w) for w in words if w is not None)
    items = tuple(TOTAL2 if kind_at(r) == "series" else ANTI2 for r in range(length))
    return QuestionableRepresentation(OrderSequence(items), tuple(words))


def build_width2(o: FiniteOrder) -> QuestionableRepresentation:
    return width2_from_tree(sp_decompose(o), o.n)


def build_identity(o: FiniteOrder) -> QuestionableRepresentation:
    """One rank whose alphabet is the order itself; works for any order."""
    return QuestionableRepresentation(OrderSequence((o,)), tuple((x,) for x in range(o.n)))


def strictify(host: FiniteOrder, q: QuestionableRepresentation) -> QuestionableRepresentation:
    """Give every prefix pair a question by inserting a rank with two
    incomparable digits u (0) and v (1) right after the shorter word."""
    if not validate_qrep(host, q):
        raise ValidationError("strictify needs a valid representation")
    seq = q.alphabet.materialize(q.length)
    items = list(seq.items)
    words = [list(w) for w in q.words]
    while True:
        alpha = OrderSequence(tuple(items), seq.tail)
        short = None
        for i in range(len(words)):
            for j in range(len(words)):
                if i != j and len(words[i]) < len(words[j]) and \
                        words[j][:len(words[i])] == words[i]:
                    if short is None or len(words[i]) < len(words[short]):
                        short = i
        if short is None:
            break
        L = len(words[short])
        items.insert(L, ANTI2)
        for z, w in enumerate(words):
            if z == short:
                w.append(0)
            elif len(w) >= L:
                w.insert(L, 1)
    out = QuestionableRepresentation(alpha, tuple(tuple(w) for w in words), q.min_length)
    return out


def prefix_components(o: FiniteOrder, reps: Sequence[QuestionableRepresentation],
                      components: Optional[Sequence[Sequence[int]]] = None
                      ) -> QuestionableRepresentation:
    """Merge per-component representations under distinct incomparable prefixes.

    ``reps[k]`` represents ``induced(o, components[k])`` (components default to
    the connected components in their standard order).  Singleton components
    keep only their prefix.
    """
    comps = [list(c) for c in (components or connected_components(o))]
    if len(comps) != len(reps):
        raise ValidationError("one representation per component is required")
    covered = sorted(x for c in comps for x in c)
    if covered != list(range(o.n)):
        raise ValidationError("components must partition the elements")
    for c, r in zip(comps, reps):
        if not validate_qrep(induced(o, c), r):
            raise ValidationError(f"component representation for {c} does not validate")
    if len(comps) == 1:
        words = [None] * o.n
        for k, x in enumerate(comps[0]):
            words[x] = reps[0].words[k]
        return QuestionableRepresentation(reps[0].alphabet, tuple(words), reps[0].min_length)
    p = math.ceil(math.log2(len(comps)))
    length = max(r.length for c, r in zip(comps, reps) if len(c) > 1) if \
        any(len(c) > 1 for c in comps) else 0
    merged = []
    for r in range(length):
        item = None
        for c, rep in zip(comps, reps):
            if len(c) > 1 and rep.length > r:
                it = rep.alphabet.item(r)
                if item is None:
                    item = it
                elif it != item:
                    raise ValidationError(f"component alphabets disagree at rank {r}")
        merged.append(item if item is not None else TOTAL2)
    words = [None] * o.n
    for k, (c, rep) in enumerate(zip(comps, reps)):
        prefix = tuple((k >> (p - 1 - b)) & 1 for b in range(p))
        for idx, x in enumerate(c):
            words[x] = prefix if len(c) == 1 else prefix + rep.words[idx]
    return QuestionableRepresentation(OrderSequence(tuple([ANTI2] * p + merged)), tuple(words))


def build(o: FiniteOrder, method: str = "auto", seed=None) -> QuestionableRepresentation:
    """Dispatch used by the command line: total, itov, width2 or identity."""
    if method == "auto":
        if o.is_total():
            method = "total"
        elif is_itov_fast(o):
            method = "itov"
        else:
            try:
                return build_width2(o)
            except Exception:
                method = "identity"
    if method == "total":
        ins = None
        if seed is not None:
            ins = list(range(o.n))
            random.Random(seed).shuffle(ins)
        return build_total_strict_binary(o, ins)
    if method == "itov":
        return build_itov_total_binary(o)
    if method == "width2":
        return build_width2(o)
    if method == "identity":
        return build_identity(o)
    raise ValueError(f"unknown method {method!r}")
