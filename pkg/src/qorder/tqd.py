"""Clique terms, tree decompositions and tree-questionable decompositions.

A tree-questionable decomposition (TQD) is a rooted tree whose leaves are
labelled by elements and whose internal nodes carry runs of mappings from
the elements below them into small adjacency structures.  For a pair of
elements, the runs met on the way from a minimal common ancestor up to
the root are read as two words; the first mapping sending them to
different vertices (the question) must carry their adjacency type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union as TUnion

from .errors import (CoverageError, InvalidDecompositionError, LabelError,
                     NotCompactError, ValidationError)
from .order import FiniteOrder
from .structures import AdjacencyStructure, as_structure, DEFAULTS
from .words import QuestionableRepresentation, validate_qrep
from .build import strictify


# clique terms

@dataclass(frozen=True)
class Make:
    label: int
    tag: Optional[int] = None  # element represented by this vertex, if known


@dataclass(frozen=True)
class Union:
    left: "CliqueTerm"
    right: "CliqueTerm"


@dataclass(frozen=True)
class Add:
    a: int
    b: int
    type: str
    child: "CliqueTerm"


@dataclass(frozen=True)
class Relabel:
    src: int
    dst: int
    child: "CliqueTerm"


CliqueTerm = TUnion[Make, Union, Add, Relabel]


@dataclass
class CliqueEval:
    structure: AdjacencyStructure
    labels: list
    tags: list

    def by_tags(self) -> AdjacencyStructure:
        """Structure renumbered so that vertex i is the one tagged i."""
        if sorted(self.tags) != list(range(len(self.tags))):
            raise LabelError("tags do not form a permutation of the vertices")
        return self.structure.permuted(self.tags)


def _evaluate(t, kind):
    """Vertices in left-to-right leaf order: (types, labels, tags)."""
    if isinstance(t, Make):
        if t.label < 1:
            raise LabelError("labels start at 1")
        return [["="]], [t.label], [t.tag]
    if isinstance(t, Union):
        ta, la, ga = _evaluate(t.left, kind)
        tb, lb, gb = _evaluate(t.right, kind)
        na, nb = len(la), len(lb)
        d = DEFAULTS[kind]
        types = [row + [d] * nb for row in ta] + [[d] * na + row for row in tb]
        return types, la + lb, ga + gb
    if isinstance(t, Add):
        if t.a == t.b:
            raise LabelError("ADD needs two distinct labels")
        types, labels, tags = _evaluate(t.child, kind)
        flip = {"order": {"LT": "GT", "GT": "LT", "INC": "INC"},
                "graph": {"EDGE": "EDGE", "NONE": "NONE"}}[kind]
        if t.type not in flip:
            raise LabelError(f"type {t.type!r} not allowed for {kind}")
        for i, li in enumerate(labels):
            if li != t.a:
                continue
            for j, lj in enumerate(labels):
                if lj == t.b:
                    types[i][j] = t.type
                    types[j][i] = flip[t.type]
        return types, labels, tags
    if isinstance(t, Relabel):
        types, labels, tags = _evaluate(t.child, kind)
        return types, [t.dst if l == t.src else l for l in labels], tags
    raise TypeError(f"not a clique term: {t!r}")


def eval_clique_term(t: CliqueTerm, kind: str = "order") -> CliqueEval:
    types, labels, tags = _evaluate(t, kind)
    return CliqueEval(AdjacencyStructure(kind, types), labels, tags)


def term_depth(t: CliqueTerm) -> int:
    """Number of operations on the longest root-to-leaf path (MAKE included)."""
    if isinstance(t, Make):
        return 1
    if isinstance(t, Union):
        return 1 + max(term_depth(t.left), term_depth(t.right))
    return 1 + term_depth(t.child)


def term_labels(t: CliqueTerm) -> set:
    if isinstance(t, Make):
        return {t.label}
    if isinstance(t, Union):
        return term_labels(t.left) | term_labels(t.right)
    if isinstance(t, Add):
        return {t.a, t.b} | term_labels(t.child)
    return {t.src, t.dst} | term_labels(t.child)


def clique_depth_bound(k: int, l: int, n: int) -> int:
    """l(k(k-1) + ceil(lg(k-1))) + ceil(lg n) + (l-1)(k-1)."""
    lg = lambda v: math.ceil(math.log2(v)) if v > 1 else 0
    return l * (k * (k - 1) + lg(k - 1)) + lg(n) + (l - 1) * (k - 1)


def qrep_to_clique(host: FiniteOrder, q: QuestionableRepresentation) -> CliqueTerm:
    """Clique term over at most width(q) labels describing host.

    Elements sharing a prefix are split by their digit at the next rank;
    each digit class is built recursively with every vertex labelled
    digit + 1, the classes are joined by a balanced union tree, and ADD
    operations sit right above the union where two related classes meet.
    A class is then relabelled to the label its parent expects.
    Non-strict representations are strictified first.
    """
    if not validate_qrep(host, q):
        raise ValidationError("representation does not validate")
    if not q.is_strict():
        q = strictify(host, q)
    words = q.words

    def join(groups, item):
        # groups: list of (digit, term); balanced union with ADDs at meeting points
        if len(groups) == 1:
            return groups[0][1], [groups[0][0]]
        mid = len(groups) // 2
        left, dl = join(groups[:mid], item)
        right, dr = join(groups[mid:], item)
        t = Union(left, right)
        for d in dl:
            for e in dr:
                r = item.rel(d, e)
                if r.name == "LT":
                    t = Add(d + 1, e + 1, "LT", t)
                elif r.name == "GT":
                    t = Add(e + 1, d + 1, "LT", t)
        return t, dl + dr

    def build(elems, r, label):
        if len(elems) == 1:
            return Make(label if label is not None else 1, elems[0])
        classes = {}
        for x in elems:
            classes.setdefault(words[x][r], []).append(x)
        if len(classes) == 1:
            return build(elems, r + 1, label)
        digits = sorted(classes)
        subs = [(d, build(classes[d], r + 1, d + 1)) for d in digits]
        t, _ = join(subs, q.alphabet.item(r))
        if label is not None:
            for d in digits:
                if d + 1 != label:
                    t = Relabel(d + 1, label, t)
        return t

    return build(list(range(host.n)), 0, None)


# tree-questionable decompositions

@dataclass(frozen=True)
class Mapping:
    assign: tuple  # sorted (element, vertex) pairs
    structure: AdjacencyStructure

    @staticmethod
    def of(assign: dict, structure: AdjacencyStructure) -> "Mapping":
        return Mapping(tuple(sorted(assign.items())), structure)

    def image(self) -> dict:
        return dict(self.assign)


@dataclass
class TQDecomposition:
    """Nodes are 0..N-1; parent[root] is None.  Leaves carry ``elem``,
    internal nodes carry ``runs`` (a list of Mappings)."""

    kind: str
    parent: list = field(default_factory=list)
    elem: list = field(default_factory=list)
    runs: list = field(default_factory=list)

    def add_node(self, parent=None, run=None) -> int:
        self.parent.append(parent)
        self.elem.append(None)
        self.runs.append(list(run or []))
        return len(self.parent) - 1

    def add_leaf(self, parent, element) -> int:
        self.parent.append(parent)
        self.elem.append(element)
        self.runs.append([])
        return len(self.parent) - 1

    @property
    def size(self) -> int:
        return len(self.parent)

    def root(self) -> int:
        roots = [i for i, p in enumerate(self.parent) if p is None]
        if len(roots) != 1:
            raise InvalidDecompositionError(f"expected one root, found {len(roots)}")
        return roots[0]

    def children(self) -> list:
        ch = [[] for _ in self.parent]
        for i, p in enumerate(self.parent):
            if p is not None:
                ch[p].append(i)
        return ch

    def is_leaf(self, v: int) -> bool:
        return self.elem[v] is not None

    def elements(self) -> list:
        return sorted({e for e in self.elem if e is not None})

    def leaves_of(self) -> dict:
        out = {}
        for v, e in enumerate(self.elem):
            if e is not None:
                out.setdefault(e, []).append(v)
        return out

    def bijective(self) -> bool:
        return all(len(v) == 1 for v in self.leaves_of().values())

    def width(self) -> int:
        return max((m.structure.n for run in self.runs for m in run), default=0)

    def ancestors(self, v: int) -> list:
        out = []
        p = self.parent[v]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out

    def preorder(self) -> list:
        ch = self.children()
        out, stack = [], [self.root()]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(ch[v]))
        return out

    def renumbered(self) -> "TQDecomposition":
        """Copy with nodes numbered in preorder."""
        order = self.preorder()
        new_id = {v: k for k, v in enumerate(order)}
        out = TQDecomposition(self.kind)
        for v in order:
            p = self.parent[v]
            out.parent.append(None if p is None else new_id[p])
            out.elem.append(self.elem[v])
            out.runs.append(list(self.runs[v]))
        return out

    def __eq__(self, other):
        return (isinstance(other, TQDecomposition) and self.kind == other.kind
                and self.parent == other.parent and self.elem == other.elem
                and self.runs == other.runs)


def depths(d: TQDecomposition) -> tuple[int, int]:
    """(structural, logical): nodes on the longest leaf-to-root path, and the
    largest total run length along such a path."""
    alpha = beta = 0
    for v in range(d.size):
        if not d.is_leaf(v):
            continue
        anc = d.ancestors(v)
        alpha = max(alpha, 1 + len(anc))
        beta = max(beta, sum(len(d.runs[a]) for a in anc))
    return alpha, beta


@dataclass(frozen=True)
class TQDReport:
    ok: bool
    pair: Optional[tuple] = None
    node: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        return "pass" if self.ok else f"fail: pair {self.pair} at node {self.node}: {self.reason}"


def tqd_validate(x, d: TQDecomposition, strict: bool = True) -> TQDReport:
    """Check every pair against the runs above each minimal common ancestor.

    With ``strict`` (the default) a question is required on every path;
    otherwise a pair without any question is accepted when its type is the
    default one, mirroring the prefix rule of word comparison.
    """
    x = as_structure(x)
    leaves = d.leaves_of()
    for e in range(x.n):
        if e not in leaves:
            raise CoverageError(f"element {e} has no leaf")
    if set(leaves) - set(range(x.n)):
        raise CoverageError("leaf labelled with an unknown element")
    ch = d.children()
    anc = {}
    for e, ls in leaves.items():
        s = set()
        for v in ls:
            s.update(d.ancestors(v))
        anc[e] = s
    images = [[m.image() for m in run] for run in d.runs]
    for u in range(x.n):
        for v in range(u + 1, x.n):
            common = anc[u] & anc[v]
            want = x.type(u, v)
            minimal = [m for m in common if not any(c in common for c in ch[m])]
            if not minimal:
                return TQDReport(False, (u, v), None, "no common ancestor")
            for m in minimal:
                got = None
                node = m
                while node is not None and got is None:
                    for k, img in enumerate(images[node]):
                        if u not in img or v not in img:
                            return TQDReport(False, (u, v), node,
                                             f"mapping {k} misses an element")
                        a, b = img[u], img[v]
                        if a != b:
                            got = d.runs[node][k].structure.type(a, b)
                            break
                    node = d.parent[node]
                if got is None:
                    if strict or want != x.default:
                        return TQDReport(False, (u, v), m, "no question")
                elif got != want:
                    return TQDReport(False, (u, v), m, f"question gives {got}, structure has {want}")
    return TQDReport(True)


def tqd_from_qrep(host: FiniteOrder, q: QuestionableRepresentation) -> TQDecomposition:
    """One internal node whose run reads the words rank by rank."""
    if not q.is_strict():
        q = strictify(host, q)
    d = TQDecomposition("order")
    run = []
    for r in range(q.length):
        st = AdjacencyStructure.from_order(q.alphabet.item(r))
        run.append(Mapping.of({x: (w[r] if len(w) > r else 0) for x, w in enumerate(q.words)}, st))
    root = d.add_node(None, run)
    for x in range(host.n):
        d.add_leaf(root, x)
    return d


def linear_tqd(x) -> TQDecomposition:
    """Caterpillar TQD of width 2: element i joins at its own node, whose run
    has one mapping per earlier element j separating j from everything else."""
    x = as_structure(x)
    n = x.n
    d = TQDecomposition(x.kind)
    if n == 1:
        d.add_leaf(None, 0)
        return d
    below = None
    for i in range(1, n):
        run = []
        for j in range(i):
            st = AdjacencyStructure.from_pairs(x.kind, 2, [(0, 1, x.type(j, i))]) \
                if x.type(j, i) != x.default else AdjacencyStructure.empty(x.kind, 2)
            run.append(Mapping.of({e: (0 if e == j else 1) for e in range(i + 1)}, st))
        node = d.add_node(None, run)
        if below is None:
            d.add_leaf(node, 0)
        else:
            d.parent[below] = node
        d.add_leaf(node, i)
        below = node
    return d.renumbered()


# clique term -> TQD

def is_compact(t: CliqueTerm) -> bool:
    try:
        _compact_walk(t)
    except NotCompactError:
        return False
    return True


def _compact_walk(t):
    if isinstance(t, Make):
        return
    if isinstance(t, Relabel):
        _compact_walk(t.child)
        return
    if isinstance(t, Add):
        s = t
        while isinstance(s, Add):
            s = s.child
        if not isinstance(s, Union):
            raise NotCompactError("ADD not directly above a UNION")
        _compact_walk(s)
        return
    _compact_walk(t.left)
    _compact_walk(t.right)


def tqd_from_clique_term(x, t: CliqueTerm) -> TQDecomposition:
    """Bijective TQD with one mapping per UNION into 2k vertices: the k labels
    on the left side and the k labels on the right side."""
    x = as_structure(x)
    _compact_walk(t)
    kind = x.kind
    k = max(term_labels(t))
    ev = eval_clique_term(t, kind)
    ids = ev.tags if sorted(g for g in ev.tags if g is not None) == list(range(len(ev.tags))) \
        else list(range(len(ev.tags)))
    got = ev.structure.permuted(ids)
    if got != x:
        raise ValidationError("clique term does not evaluate to the structure")
    d = TQDecomposition(kind)
    counter = [0]

    def rec(term, parent):
        """Returns (element list, labels) of the subterm, leaf order."""
        if isinstance(term, Make):
            e = ids[counter[0]]
            counter[0] += 1
            d.add_leaf(parent, e)
            return [e], [term.label]
        if isinstance(term, Relabel):
            els, labels = rec(term.child, parent)
            return els, [term.dst if l == term.src else l for l in labels]
        adds = []
        while isinstance(term, Add):
            adds.append(term)
            term = term.child
        node = d.add_node(parent)
        le, ll = rec(term.left, node)
        re, rl = rec(term.right, node)
        side_l, side_r = _evaluate(term.left, kind)[0], _evaluate(term.right, kind)[0]
        st_pairs = {}
        for a in reversed(adds):  # innermost first, outer ones override
            for side_a, side_b in ((0, k), (k, 0)):
                i, j = side_a + a.a - 1, side_b + a.b - 1
                st_pairs[(i, j)] = a.type
                st_pairs.pop((j, i), None)
            # an ADD may only create adjacencies across the union
            for side, labels in ((side_l, ll), (side_r, rl)):
                for p, lp in enumerate(labels):
                    for q_, lq in enumerate(labels):
                        if lp == a.a and lq == a.b and side[p][q_] != a.type:
                            raise NotCompactError("ADD changes a pair on one side of its union")
        st = AdjacencyStructure.from_pairs(kind, 2 * k, [(i, j, ty) for (i, j), ty in st_pairs.items()])
        assign = {e: l - 1 for e, l in zip(le, ll)}
        assign.update({e: k + l - 1 for e, l in zip(re, rl)})
        d.runs[node].append(Mapping.of(assign, st))
        labels = ll + rl
        return le + re, labels

    rec(t, None)
    return d.renumbered()


# tree decompositions

@dataclass
class TreeDecomposition:
    parent: list
    bags: list

    def __post_init__(self):
        self.bags = [frozenset(b) for b in self.bags]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def root(self) -> int:
        roots = [i for i, p in enumerate(self.parent) if p is None]
        if len(roots) != 1:
            raise InvalidDecompositionError("tree decomposition needs exactly one root")
        return roots[0]

    def children(self) -> list:
        ch = [[] for _ in self.parent]
        for i, p in enumerate(self.parent):
            if p is not None:
                ch[p].append(i)
        return ch

    def depth(self) -> int:
        """Nodes on the longest root-to-leaf path."""
        best = 0
        for v in range(len(self.parent)):
            k, p = 1, self.parent[v]
            while p is not None:
                k, p = k + 1, self.parent[p]
            best = max(best, k)
        return best


def check_tree_decomposition(x, td: TreeDecomposition):
    x = as_structure(x)
    if len(td.parent) != len(td.bags) or not td.parent:
        raise InvalidDecompositionError("parent and bag lists disagree")
    root = td.root()
    seen, stack = set(), [root]
    ch = td.children()
    while stack:
        v = stack.pop()
        seen.add(v)
        stack.extend(ch[v])
    if len(seen) != len(td.parent):
        raise InvalidDecompositionError("tree decomposition is not connected")
    for b in td.bags:
        if any(not 0 <= e < x.n for e in b):
            raise InvalidDecompositionError("bag holds an unknown element")
    for e in range(x.n):
        nodes = [v for v, b in enumerate(td.bags) if e in b]
        if not nodes:
            raise InvalidDecompositionError(f"element {e} is in no bag")
        tops = [v for v in nodes if td.parent[v] is None or e not in td.bags[td.parent[v]]]
        if len(tops) != 1:
            raise InvalidDecompositionError(f"bags of element {e} are not connected")
    for i, j, _ in x.pairs():
        if not any(i in b and j in b for b in td.bags):
            raise InvalidDecompositionError(f"pair ({i}, {j}) is in no common bag")


def tqd_from_tree_decomposition(x, td: TreeDecomposition, sinks: str = "per-child") -> TQDecomposition:
    """TQD over the decomposition tree with element leaves below the lowest
    bags holding them.

    Each node maps its bag elements to themselves in the induced structure.
    The other elements below it go to isolated sink vertices: with
    ``sinks="single"`` one sink g for all of them, with "per-child" (default)
    one sink per child subtree they come from.  Two elements forgotten in
    different child subtrees of a node are separated only by distinct sinks,
    so the single-sink variant leaves such pairs without a question.
    """
    x = as_structure(x)
    check_tree_decomposition(x, td)
    if sinks not in ("single", "per-child"):
        raise ValueError("sinks must be 'single' or 'per-child'")
    ch = td.children()
    below = [None] * len(td.parent)

    def collect(v):
        s = set(td.bags[v])
        for c in ch[v]:
            s |= collect(c)
        below[v] = s
        return s

    collect(td.root())
    d = TQDecomposition(x.kind)
    node_of = {}

    def rec(v, parent):
        if not below[v]:
            return
        node = d.add_node(parent)
        node_of[v] = node
        bag = sorted(td.bags[v])
        idx = {e: k for k, e in enumerate(bag)}
        st = x.induced(bag)
        assign = dict(idx)
        sink_of = {}
        for c in ch[v]:
            gone = below[c] - td.bags[v]
            if not gone:
                continue
            key = 0 if sinks == "single" else len(set(sink_of.values()))
            for e in gone:
                sink_of[e] = key
        nsinks = len(set(sink_of.values()))
        if nsinks:
            k = len(bag)
            t = [list(row) + [x.default] * nsinks for row in st.types]
            t += [[x.default] * (k + nsinks) for _ in range(nsinks)]
            for s in range(k, k + nsinks):
                t[s][s] = "="
            st = AdjacencyStructure(x.kind, t)
            for e, s in sink_of.items():
                assign[e] = k + s
        d.runs[node].append(Mapping.of(assign, st))
        for e in bag:
            if not any(e in td.bags[c] for c in ch[v]):
                d.add_leaf(node, e)
        for c in ch[v]:
            rec(c, node)

    rec(td.root(), None)
    return d.renumbered()


def path_decomposition(n: int, window: int) -> TreeDecomposition:
    """Bags {i, .., i+window-1} of consecutive elements, chained from the first."""
    if n <= window:
        return TreeDecomposition([None], [range(n)])
    count = n - window + 1
    return TreeDecomposition([None] + list(range(count - 1)),
                             [range(i, i + window) for i in range(count)])


def elimination_decomposition(x, order: Sequence[int]) -> TreeDecomposition:
    """Tree decomposition from eliminating vertices in the given order.

    Each vertex v gets the bag {v} plus its later neighbours in the filled
    graph; its parent is the bag of the earliest of those neighbours.
    """
    x = as_structure(x)
    n = x.n
    pos = {v: i for i, v in enumerate(order)}
    adj = [set() for _ in range(n)]
    for i, j, _ in x.pairs():
        adj[i].add(j)
        adj[j].add(i)
    bags, parent = [None] * n, [None] * n
    for v in order:
        later = {u for u in adj[v] if pos[u] > pos[v]}
        bags[pos[v]] = frozenset(later | {v})
        for a in later:
            adj[a] |= later - {a}
        if later:
            parent[pos[v]] = pos[min(later, key=pos.get)]
    roots = [i for i, p in enumerate(parent) if p is None]
    for r in roots[:-1]:
        parent[r] = roots[-1]  # disconnected graphs: hang components on the last root
    return TreeDecomposition(parent, bags)


# grids

def _edge_struct(kind="graph"):
    return AdjacencyStructure.from_pairs(kind, 2, [(0, 1, "EDGE")])


def _path_tqd(d: TQDecomposition, vs: Sequence[int], parent) -> int:
    """Bijective TQD of the path vs[0] - vs[1] - ... below parent."""
    if len(vs) == 1:
        return d.add_leaf(parent, vs[0])
    node = d.add_node(parent)
    if len(vs) == 2:
        d.runs[node] = [Mapping.of({vs[0]: 0, vs[1]: 1}, _edge_struct())]
        for v in vs:
            d.add_leaf(node, v)
        return node
    if len(vs) == 3:
        a, b, c = vs
        d.runs[node] = [Mapping.of({a: 0, b: 1, c: 0}, _edge_struct()),
                        Mapping.of({a: 0, b: 0, c: 1}, AdjacencyStructure.empty("graph", 2))]
        for v in vs:
            d.add_leaf(node, v)
        return node
    h = (len(vs) + 1) // 2
    left, right = vs[:h], vs[h:]
    _path_tqd(d, left, node)
    _path_tqd(d, right, node)
    first = {v: 2 for v in vs}
    first[left[-1]] = 0
    first[right[0]] = 1
    st = AdjacencyStructure.from_pairs("graph", 3, [(0, 1, "EDGE")])
    second = {v: 0 for v in left}
    second.update({v: 1 for v in right})
    d.runs[node] = [Mapping.of(first, st), Mapping.of(second, AdjacencyStructure.empty("graph", 2))]
    return node


def _grid_tqd(d, p, q, c0, c1, parent):
    cols = range(c0, c1)
    if len(cols) == 1:
        return _path_tqd(d, [r * q + c0 for r in range(p)], parent)
    node = d.add_node(parent)
    cm = (c0 + c1 + 1) // 2
    _grid_tqd(d, p, q, c0, cm, node)
    _grid_tqd(d, p, q, cm, c1, node)
    left = {r * q + c for r in range(p) for c in range(c0, cm)}
    right = {r * q + c for r in range(p) for c in range(cm, c1)}
    lrung = {r * q + cm - 1: r for r in range(p)}
    rrung = {r * q + cm: r for r in range(p)}
    run = []
    iso3 = AdjacencyStructure.empty("graph", 3)
    for b in range(math.ceil(math.log2(p))):
        m = {}
        for v in left | right:
            row = lrung.get(v, rrung.get(v))
            m[v] = 2 if row is None else (row >> b) & 1
        run.append(Mapping.of(m, iso3))
    last = {}
    for v in left:
        last[v] = 0 if v in lrung else 2
    for v in right:
        last[v] = 1 if v in rrung else 0
    run.append(Mapping.of(last, AdjacencyStructure.from_pairs("graph", 3, [(0, 1, "EDGE")])))
    d.runs[node] = run
    return node


def tqd_grid(p: int, q: int) -> TQDecomposition:
    """Bijective width-3 TQD of the p x q grid (vertex r*q + c).

    Columns are halved recursively; the two halves meet along a ladder of
    p rungs, separated by ceil(lg p) mappings on the bits of the rung row and
    one mapping that joins the two ends of each rung.  A single column or a
    single row is a path, split in halves joined by two mappings.
    """
    if p < 1 or q < 1:
        raise ValueError("grid needs p, q >= 1")
    d = TQDecomposition("graph")
    if p == 1:
        _path_tqd(d, list(range(q)), None)
    else:
        _grid_tqd(d, p, q, 0, q, None)
    return d.renumbered()


def grid_depth_bounds(p: int, q: int) -> tuple[int, int]:
    """(structural, logical) bounds of the grid construction."""
    lg53 = math.ceil(math.log(p, 5 / 3) - 1e-12) if p > 1 else 0
    lg32 = math.ceil(math.log(q, 3 / 2) - 1e-12) if q > 1 else 0
    lgp = math.ceil(math.log2(p)) if p > 1 else 0
    return lg53 + lg32, 2 * lg53 + (lgp + 1) * lg32
