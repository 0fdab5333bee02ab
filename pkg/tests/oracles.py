"""Naive reference computations used to check the library.

Nothing here imports the algorithms under test; only the FiniteOrder
container is shared so results can be compared.
"""

from __future__ import annotations

import itertools

from qorder.order import FiniteOrder


def closure_table(n, rels):
    """Boolean less-than table by Floyd-Warshall; None on a cycle."""
    lt = [[False] * n for _ in range(n)]
    for i, j in rels:
        lt[i][j] = True
    for k in range(n):
        for i in range(n):
            if lt[i][k]:
                for j in range(n):
                    if lt[k][j]:
                        lt[i][j] = True
    if any(lt[i][i] for i in range(n)):
        return None
    return lt


def lt_table(o: FiniteOrder):
    return [[o.lt(i, j) for j in range(o.n)] for i in range(o.n)]


def rel_code(lt, i, j):
    if i == j:
        return "EQ"
    if lt[i][j]:
        return "LT"
    if lt[j][i]:
        return "GT"
    return "INC"


def linear_extensions(o: FiniteOrder) -> int:
    lt = lt_table(o)
    count = 0
    for perm in itertools.permutations(range(o.n)):
        pos = {x: k for k, x in enumerate(perm)}
        if all(pos[i] < pos[j] for i in range(o.n) for j in range(o.n) if lt[i][j]):
            count += 1
    return count


def interleavings(p: int, q: int) -> int:
    """Sequences of p A's and q B's, counted one by one."""
    return sum(1 for s in itertools.product("AB", repeat=p + q) if s.count("A") == p)


def isomorphic(a: FiniteOrder, b: FiniteOrder) -> bool:
    if a.n != b.n:
        return False
    la, lb = lt_table(a), lt_table(b)
    n = a.n
    for perm in itertools.permutations(range(n)):
        if all(la[i][j] == lb[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False


def pattern_witness(o: FiniteOrder, pattern_rels, size):
    """Tuple t with lt(t[i], t[j]) exactly for the pattern's relations, or None."""
    pat = closure_table(size, pattern_rels)
    lt = lt_table(o)
    for t in itertools.permutations(range(o.n), size):
        if all(lt[t[i]][t[j]] == pat[i][j] for i in range(size) for j in range(size) if i != j):
            return t
    return None


OBS1_RELS = [(0, 1), (2, 3)]
OBS2_RELS = [(0, 1), (2, 3), (2, 1)]
OBST_RELS = [(0, 1)]


def has_obs1(o):
    return pattern_witness(o, OBS1_RELS, 4) is not None


def has_obs2(o):
    return pattern_witness(o, OBS2_RELS, 4) is not None


def has_obst(o):
    return pattern_witness(o, OBST_RELS, 3) is not None


def longest_chain_below(o: FiniteOrder, x: int) -> int:
    """Longest chain strictly below x, by enumerating increasing paths."""
    lt = lt_table(o)
    best = 0

    def walk(v, length):
        nonlocal best
        best = max(best, length)
        for u in range(o.n):
            if lt[u][v]:
                walk(u, length + 1)

    walk(x, 0)
    return best


def maximal_chains(o: FiniteOrder):
    """All maximal chains as tuples, bottom to top."""
    lt = lt_table(o)
    n = o.n
    covers = [[j for j in range(n) if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n))]
              for i in range(n)]
    minimal = [i for i in range(n) if not any(lt[j][i] for j in range(n))]
    out = []

    def walk(path):
        nxt = covers[path[-1]]
        if not nxt:
            out.append(tuple(path))
        for j in nxt:
            walk(path + [j])

    for m in minimal:
        walk([m])
    return out


def union_of_maximum_chains(o: FiniteOrder):
    chains = maximal_chains(o)
    h = max(len(c) for c in chains)
    return sorted({x for c in chains if len(c) == h for x in c})


def is_weak_order(o: FiniteOrder, subset=None) -> bool:
    """Incomparability plus equality transitive on the subset."""
    s = list(range(o.n)) if subset is None else list(subset)
    lt = lt_table(o)
    inc = lambda a, b: a == b or (not lt[a][b] and not lt[b][a])
    return all(inc(a, c) for a in s for b in s for c in s if inc(a, b) and inc(b, c))


def question_rel(wx, wy, items, tail):
    """Relation of two words by scanning ranks."""
    for r in range(min(len(wx), len(wy))):
        if wx[r] != wy[r]:
            it = items[r] if r < len(items) else tail
            return rel_code(lt_table(it), wx[r], wy[r]), True
    return ("EQ" if wx == wy else "INC"), False


def qrep_ok(o: FiniteOrder, q, strict=False) -> bool:
    lt = lt_table(o)
    items, tail = q.alphabet.items, q.alphabet.tail
    if len(set(q.words)) != len(q.words):
        return False
    for i in range(o.n):
        for j in range(o.n):
            if i == j:
                continue
            r, has_q = question_rel(q.words[i], q.words[j], items, tail)
            if r != rel_code(lt, i, j) or (strict and not has_q):
                return False
    return True
