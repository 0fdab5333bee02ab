"""Line-oriented text formats.

* ``.ord``  orders: ``order <n>``, ``name <i> <token>``, ``lt <i> <j>``
* ``.adj``  graphs: ``graph <n>``, ``edge <i> <j>``
* ``.qrep`` representations: ``qrep n=<n> minlen=<m>``, ``rank <r> <alphabet>``,
  ``rank * <alphabet>``, ``word <e> <d0> <d1> ...``
* ``.tqd``  tree-questionable decompositions (preorder node list)
* ``.cwt``  clique terms as s-expressions
* ``.td``   tree decompositions: ``treedec <n>``, ``bag <id> parent=<pid|-> <e> ...``

``#`` starts a comment everywhere.  Every printer emits text that its
parser maps back to an equal value.
"""

from __future__ import annotations

import os
import tempfile
from typing import Optional

from .errors import ParseError, QOrderError
from .order import FiniteOrder, cover_pairs, from_relations
from .structures import AdjacencyStructure, DEFAULTS
from .tqd import (Add, CliqueTerm, Make, Mapping, Relabel, TQDecomposition,
                  TreeDecomposition, Union)
from .words import ANTI2, TOTAL2, OrderSequence, QuestionableRepresentation


def _lines(text: str):
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield k, line.split()


def _int(tok: str, k: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {k}: expected an integer, got {tok!r}") from None


def _kv(tok: str, key: str, k: int) -> str:
    if not tok.startswith(key + "="):
        raise ParseError(f"line {k}: expected {key}=..., got {tok!r}")
    return tok[len(key) + 1:]


def write_atomic(path: str, text: str):
    """Write to a temporary file in the same directory, then rename."""
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


# orders and graphs

def parse_order(text: str) -> tuple[FiniteOrder, dict]:
    """Returns the closed order and the optional element names."""
    n, names, rels = None, {}, []
    for k, toks in _lines(text):
        head = toks[0]
        if n is None:
            if head != "order" or len(toks) != 2:
                raise ParseError(f"line {k}: expected 'order <n>'")
            n = _int(toks[1], k)
            continue
        if head == "name" and len(toks) == 3:
            names[_int(toks[1], k)] = toks[2]
        elif head == "lt" and len(toks) == 3:
            rels.append((_int(toks[1], k), _int(toks[2], k)))
        else:
            raise ParseError(f"line {k}: unknown order line {' '.join(toks)!r}")
    if n is None:
        raise ParseError("empty order file")
    for i, j in rels:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ParseError(f"bad relation lt {i} {j} for n={n}")
    if any(not 0 <= i < n for i in names):
        raise ParseError("name for an unknown element")
    try:
        return from_relations(n, rels), names
    except QOrderError as e:
        raise ParseError(str(e)) from e


def print_order(o: FiniteOrder, names: Optional[dict] = None) -> str:
    out = [f"order {o.n}"]
    for i in sorted(names or {}):
        out.append(f"name {i} {names[i]}")
    out += [f"lt {i} {j}" for i, j in sorted(cover_pairs(o))]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> AdjacencyStructure:
    n, edges = None, []
    for k, toks in _lines(text):
        if n is None:
            if toks[0] != "graph" or len(toks) != 2:
                raise ParseError(f"line {k}: expected 'graph <n>'")
            n = _int(toks[1], k)
        elif toks[0] == "edge" and len(toks) == 3:
            i, j = _int(toks[1], k), _int(toks[2], k)
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ParseError(f"line {k}: bad edge {i} {j}")
            edges.append((i, j))
        else:
            raise ParseError(f"line {k}: unknown graph line")
    if n is None:
        raise ParseError("empty graph file")
    return AdjacencyStructure.graph(n, edges)


def print_graph(g: AdjacencyStructure) -> str:
    return "\n".join([f"graph {g.n}"] + [f"edge {i} {j}" for i, j in g.edges()]) + "\n"


def parse_structure(text: str) -> AdjacencyStructure:
    """An order or graph file, told apart by its first keyword."""
    for _, toks in _lines(text):
        if toks[0] == "order":
            return AdjacencyStructure.from_order(parse_order(text)[0])
        if toks[0] == "graph":
            return parse_graph(text)
        break
    raise ParseError("expected an order or graph file")


def print_structure(x: AdjacencyStructure) -> str:
    return print_order(x.to_order()) if x.kind == "order" else print_graph(x)


# representations

def _parse_alphabet(toks: list, k: int) -> FiniteOrder:
    spec = " ".join(toks)
    if spec == "total2":
        return TOTAL2
    if spec == "anti2":
        return ANTI2
    if spec.startswith("custom{") and spec.endswith("}"):
        body = spec[len("custom{"):-1].split()
        if len(body) < 2 or body[1] != ";":
            raise ParseError(f"line {k}: custom alphabet needs 'custom{{ <size> ; lt i j ... }}'")
        size = _int(body[0], k)
        rest = body[2:]
        if len(rest) % 3:
            raise ParseError(f"line {k}: malformed custom relations")
        rels = []
        for a in range(0, len(rest), 3):
            if rest[a] != "lt":
                raise ParseError(f"line {k}: expected 'lt' in custom alphabet")
            rels.append((_int(rest[a + 1], k), _int(rest[a + 2], k)))
        try:
            return from_relations(size, rels)
        except (QOrderError, IndexError) as e:
            raise ParseError(f"line {k}: {e}") from e
    raise ParseError(f"line {k}: unknown alphabet {spec!r}")


def _print_alphabet(o: FiniteOrder) -> str:
    if o == TOTAL2:
        return "total2"
    if o == ANTI2:
        return "anti2"
    body = " ".join(f"lt {i} {j}" for i, j in sorted(cover_pairs(o)))
    return f"custom{{ {o.n} ; {body} }}" if body else f"custom{{ {o.n} ; }}"


def parse_qrep(text: str) -> QuestionableRepresentation:
    n = minlen = None
    items, tail, words = {}, None, {}
    for k, toks in _lines(text):
        if n is None:
            if toks[0] != "qrep" or len(toks) != 3:
                raise ParseError(f"line {k}: expected 'qrep n=<n> minlen=<m>'")
            n = _int(_kv(toks[1], "n", k), k)
            minlen = _int(_kv(toks[2], "minlen", k), k)
        elif toks[0] == "rank" and len(toks) >= 3:
            alpha = _parse_alphabet(toks[2:], k)
            if toks[1] == "*":
                tail = alpha
            else:
                items[_int(toks[1], k)] = alpha
        elif toks[0] == "word" and len(toks) >= 2:
            words[_int(toks[1], k)] = tuple(_int(t, k) for t in toks[2:])
        else:
            raise ParseError(f"line {k}: unknown qrep line")
    if n is None:
        raise ParseError("empty qrep file")
    if sorted(items) != list(range(len(items))):
        raise ParseError("rank lines must cover 0..L-1")
    if sorted(words) != list(range(n)):
        raise ParseError(f"expected one word per element 0..{n - 1}")
    alpha = OrderSequence(tuple(items[r] for r in range(len(items))), tail)
    try:
        return QuestionableRepresentation(alpha, tuple(words[e] for e in range(n)), minlen)
    except QOrderError as e:
        raise ParseError(str(e)) from e


def print_qrep(q: QuestionableRepresentation) -> str:
    out = [f"qrep n={q.n} minlen={q.min_length}"]
    out += [f"rank {r} {_print_alphabet(it)}" for r, it in enumerate(q.alphabet.items)]
    if q.alphabet.tail is not None:
        out.append(f"rank * {_print_alphabet(q.alphabet.tail)}")
    out += [" ".join(["word", str(e)] + [str(d) for d in w]) for e, w in enumerate(q.words)]
    return "\n".join(out) + "\n"


# tree-questionable decompositions

def _print_struct(st: AdjacencyStructure) -> str:
    body = " ".join(f"type {i} {j} {t}" for i, j, t in st.pairs())
    return f"struct{{ {st.n} ; {body} }}" if body else f"struct{{ {st.n} ; }}"


def print_tqd(d: TQDecomposition) -> str:
    d = d.renumbered()
    out = [f"tqd kind={d.kind}"]
    for v in range(d.size):
        p = "-" if d.parent[v] is None else str(d.parent[v])
        if d.is_leaf(v):
            out.append(f"leaf {v} parent={p} elem={d.elem[v]}")
        else:
            out.append(f"node {v} parent={p} run={len(d.runs[v])}")
    for v in range(d.size):
        for s, m in enumerate(d.runs[v]):
            pairs = " ".join(f"{e}:{x}" for e, x in m.assign)
            out.append(f"map {v} {s} {pairs} {_print_struct(m.structure)}")
    return "\n".join(out) + "\n"


def parse_tqd(text: str) -> TQDecomposition:
    d = None
    declared = {}
    maps = {}
    for k, toks in _lines(text):
        if d is None:
            if toks[0] != "tqd" or len(toks) != 2:
                raise ParseError(f"line {k}: expected 'tqd kind=<order|graph>'")
            kind = _kv(toks[1], "kind", k)
            if kind not in DEFAULTS:
                raise ParseError(f"line {k}: unknown kind {kind!r}")
            d = TQDecomposition(kind)
            continue
        head = toks[0]
        if head in ("node", "leaf") and len(toks) == 4:
            v = _int(toks[1], k)
            if v != d.size:
                raise ParseError(f"line {k}: nodes must be numbered 0, 1, 2, ... in order")
            ptok = _kv(toks[2], "parent", k)
            p = None if ptok == "-" else _int(ptok, k)
            if p is not None and not 0 <= p < v:
                raise ParseError(f"line {k}: parent must be listed before its child")
            if p is not None and d.is_leaf(p):
                raise ParseError(f"line {k}: a leaf cannot have children")
            if head == "node":
                d.add_node(p)
                declared[v] = _int(_kv(toks[3], "run", k), k)
            else:
                d.add_leaf(p, _int(_kv(toks[3], "elem", k), k))
        elif head == "map" and len(toks) >= 3:
            v, s = _int(toks[1], k), _int(toks[2], k)
            try:
                cut = toks.index(next(t for t in toks if t.startswith("struct{")))
            except StopIteration:
                raise ParseError(f"line {k}: map line needs a struct{{...}}") from None
            assign = {}
            for tok in toks[3:cut]:
                e, _, x = tok.partition(":")
                assign[_int(e, k)] = _int(x, k)
            body = " ".join(toks[cut:])
            if not body.endswith("}"):
                raise ParseError(f"line {k}: unterminated struct")
            parts = body[len("struct{"):-1].split()
            if len(parts) < 2 or parts[1] != ";":
                raise ParseError(f"line {k}: struct needs '<size> ;'")
            size, rest = _int(parts[0], k), parts[2:]
            if len(rest) % 4:
                raise ParseError(f"line {k}: malformed struct types")
            pairs = []
            for a in range(0, len(rest), 4):
                if rest[a] != "type":
                    raise ParseError(f"line {k}: expected 'type i j T'")
                pairs.append((_int(rest[a + 1], k), _int(rest[a + 2], k), rest[a + 3]))
            try:
                st = AdjacencyStructure.from_pairs(d.kind, size, pairs)
            except (QOrderError, KeyError, IndexError) as e:
                raise ParseError(f"line {k}: bad struct: {e}") from e
            if any(not 0 <= x < size for x in assign.values()):
                raise ParseError(f"line {k}: mapping leaves the structure")
            maps[(v, s)] = Mapping.of(assign, st)
        else:
            raise ParseError(f"line {k}: unknown tqd line")
    if d is None:
        raise ParseError("empty tqd file")
    for v, m in declared.items():
        run = []
        for s in range(m):
            if (v, s) not in maps:
                raise ParseError(f"node {v} declares run={m} but map {v} {s} is missing")
            run.append(maps.pop((v, s)))
        d.runs[v] = run
    if maps:
        raise ParseError(f"map lines for undeclared steps: {sorted(maps)}")
    d.root()
    return d


# clique terms

def print_term(t: CliqueTerm, kind: str = "order") -> str:
    out = [f"cwt kind={kind}"]

    def rec(s, ind):
        pad = "  " * ind
        if isinstance(s, Make):
            tag = "" if s.tag is None else f" {s.tag}"
            out.append(f"{pad}(make {s.label}{tag})")
        elif isinstance(s, Union):
            out.append(f"{pad}(union")
            rec(s.left, ind + 1)
            rec(s.right, ind + 1)
            out[-1] += ")"
        elif isinstance(s, Add):
            out.append(f"{pad}(add {s.a} {s.b} {s.type}")
            rec(s.child, ind + 1)
            out[-1] += ")"
        else:
            out.append(f"{pad}(relabel {s.src} {s.dst}")
            rec(s.child, ind + 1)
            out[-1] += ")"

    rec(t, 0)
    return "\n".join(out) + "\n"


def parse_term(text: str) -> tuple[CliqueTerm, str]:
    """Returns (term, kind)."""
    body, kind = [], None
    for k, toks in _lines(text):
        if kind is None:
            if toks[0] != "cwt" or len(toks) != 2:
                raise ParseError(f"line {k}: expected 'cwt kind=<order|graph>'")
            kind = _kv(toks[1], "kind", k)
            if kind not in DEFAULTS:
                raise ParseError(f"unknown kind {kind!r}")
            continue
        body.extend(toks)
    if kind is None:
        raise ParseError("empty clique term file")
    tokens = " ".join(body).replace("(", " ( ").replace(")", " ) ").split()
    # iterative s-expression reader
    stack, result = [], None
    for tok in tokens:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if not stack:
                raise ParseError("unbalanced ')'")
            node = _make_term(stack.pop())
            if stack:
                stack[-1].append(node)
            elif result is None:
                result = node
            else:
                raise ParseError("more than one top-level term")
        else:
            if not stack:
                raise ParseError(f"token {tok!r} outside parentheses")
            stack[-1].append(tok)
    if stack or result is None:
        raise ParseError("unbalanced or empty term")
    return result, kind


def _num(tok) -> int:
    if not isinstance(tok, str):
        raise ParseError("expected a number, got a subterm")
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected a number, got {tok!r}") from None


def _sub(tok):
    if isinstance(tok, str):
        raise ParseError(f"expected a subterm, got {tok!r}")
    return tok


def _make_term(items: list):
    if not items or not isinstance(items[0], str):
        raise ParseError("empty s-expression")
    op, args = items[0], items[1:]
    if op == "make" and len(args) in (1, 2):
        return Make(_num(args[0]), _num(args[1]) if len(args) == 2 else None)
    if op == "union" and len(args) == 2:
        return Union(_sub(args[0]), _sub(args[1]))
    if op == "add" and len(args) == 4:
        if not isinstance(args[2], str):
            raise ParseError("add needs a type name")
        return Add(_num(args[0]), _num(args[1]), args[2], _sub(args[3]))
    if op == "relabel" and len(args) == 3:
        return Relabel(_num(args[0]), _num(args[1]), _sub(args[2]))
    raise ParseError(f"malformed ({op} ...)")


# tree decompositions

def print_treedec(td: TreeDecomposition, n: int) -> str:
    out = [f"treedec {n}"]
    for v, (p, b) in enumerate(zip(td.parent, td.bags)):
        ptok = "-" if p is None else str(p)
        out.append(" ".join([f"bag {v}", f"parent={ptok}"] + [str(e) for e in sorted(b)]))
    return "\n".join(out) + "\n"


def parse_treedec(text: str) -> tuple[TreeDecomposition, int]:
    n, parent, bags = None, [], []
    for k, toks in _lines(text):
        if n is None:
            if toks[0] != "treedec" or len(toks) != 2:
                raise ParseError(f"line {k}: expected 'treedec <n>'")
            n = _int(toks[1], k)
        elif toks[0] == "bag" and len(toks) >= 3:
            if _int(toks[1], k) != len(parent):
                raise ParseError(f"line {k}: bags must be numbered 0, 1, 2, ... in order")
            ptok = _kv(toks[2], "parent", k)
            parent.append(None if ptok == "-" else _int(ptok, k))
            bags.append([_int(t, k) for t in toks[3:]])
        else:
            raise ParseError(f"line {k}: unknown treedec line")
    if n is None:
        raise ParseError("empty treedec file")
    if any(p is not None and not 0 <= p < len(parent) for p in parent):
        raise ParseError("parent refers to an unknown bag")
    return TreeDecomposition(parent, bags), n
