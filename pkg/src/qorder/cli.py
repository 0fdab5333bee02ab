"""Command line front end.

Exit codes: 0 on success or a positive answer, 1 when a recognition or
validation check comes out negative, 2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import sys

from . import generators as gen
from .build import build, strictify
from .counting import (count_bruteforce, count_cedar, count_sp, count_trunk,
                       count_with_method)
from .errors import (NotCedarError, NotItovError, NotSeriesParallelError,
                     NotTotalError, NotTrunkError, NotUpRegularError, ParseError,
                     QOrderError, SizeError)
from .io import (parse_order, parse_qrep, parse_structure, parse_term,
                 parse_tqd, parse_treedec, print_graph, print_order, print_qrep,
                 print_structure, print_term, print_tqd, read_text, write_atomic)
from .iso import iso_bruteforce, iso_trunk, iso_up_regular
from .recognition import CLASS_NAMES, classify, is_trunk, is_up_regular, trunk_profile
from .tqd import (depths, eval_clique_term, qrep_to_clique, tqd_from_clique_term,
                  tqd_from_tree_decomposition, tqd_grid, tqd_validate)
from .words import validate_qrep

NEGATIVE = (NotItovError, NotTotalError, NotTrunkError, NotCedarError,
            NotUpRegularError, NotSeriesParallelError)


class InputError(Exception):
    pass


def _emit(text: str, out):
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _order(path):
    return parse_order(read_text(path))[0]


def cmd_check(args):
    o = _order(args.file)
    rows = classify(o, [args.cls] if args.cls else None)
    for name, ok, detail in rows:
        print(f"{name}: {'yes' if ok else 'no'}" + (f" {detail}" if detail else ""))
    return 0 if not args.cls or rows[0][1] else 1


def cmd_qrep_build(args):
    o = _order(args.file)
    q = build(o, args.method, args.seed)
    if args.strict and not q.is_strict():
        q = strictify(o, q)
    _emit(print_qrep(q), args.output)
    return 0


def cmd_qrep_validate(args):
    o = _order(args.order)
    q = parse_qrep(read_text(args.qrep))
    if q.n != o.n:
        raise InputError(f"representation has {q.n} words, order has {o.n} elements")
    rep = validate_qrep(o, q, strict=args.strict)
    print(rep.describe())
    return 0 if rep else 1


COUNTERS = {
    "brute": count_bruteforce,
    "cedar": count_cedar,
    "sp": count_sp,
}


def cmd_count(args):
    o = _order(args.file)
    if args.method == "auto":
        value, _ = count_with_method(o)
    elif args.method == "trunk":
        if not is_trunk(o):
            raise NotTrunkError("order is not a trunk")
        value = count_trunk(trunk_profile(o))
    else:
        value = COUNTERS[args.method](o)
    print(value)
    return 0


def cmd_iso(args):
    a, b = _order(args.a), _order(args.b)
    method = args.method
    if method == "auto":
        if is_trunk(a) and is_trunk(b):
            method = "trunk"
        elif is_up_regular(a) and is_up_regular(b):
            method = "up-regular"
        else:
            method = "brute"
    if method == "trunk":
        if not (is_trunk(a) and is_trunk(b)):
            raise NotTrunkError("both orders must be trunks")
        same = iso_trunk(trunk_profile(a), trunk_profile(b))
    elif method == "up-regular":
        same = iso_up_regular(a, b)
    else:
        same = iso_bruteforce(a, b)
    print("isomorphic" if same else "not isomorphic")
    return 0 if same else 1


GEN_ARITY = {
    "chain": 1, "antichain": 1, "zigzag": 1, "tw": 1, "pmrh": 1, "groups": 1,
    "random-sp": 1, "random-itov": 1, "random-cedar": 1, "random-trunk": 1,
    "random": 1, "grid": 2,
}


def cmd_gen(args):
    kind, params = args.kind, args.params
    if len(params) != GEN_ARITY[kind]:
        raise InputError(f"{kind} takes {GEN_ARITY[kind]} integer parameter(s)")
    names = None
    if kind == "grid":
        _emit(print_graph(gen.grid(*params)), args.output)
        return 0
    (m,) = params
    if kind == "chain":
        o = gen.chain(m)
    elif kind == "antichain":
        o = gen.antichain(m)
    elif kind == "zigzag":
        o = gen.zigzag(m)
    elif kind == "tw":
        o = gen.trunk_with_woodpeckers(m)
    elif kind == "pmrh":
        o = gen.pmrh(m)
        names = dict(enumerate(gen.pmrh_names(m)))
    elif kind == "groups":
        o = gen.groups_order(m)
    elif kind == "random-sp":
        o = gen.random_sp(m, args.seed)
    elif kind == "random-itov":
        o = gen.random_itov(m, args.seed)
    elif kind == "random-cedar":
        o = gen.random_cedar(m, args.seed)
    elif kind == "random-trunk":
        o = gen.random_trunk(m, args.seed)
    else:
        o = gen.random_order(m, args.density, args.seed)
    _emit(print_order(o, names), args.output)
    return 0


def cmd_tqd_grid(args):
    _emit(print_tqd(tqd_grid(args.p, args.q)), args.output)
    return 0


def cmd_tqd_validate(args):
    x = parse_structure(read_text(args.struct))
    d = parse_tqd(read_text(args.tqd))
    if d.kind != x.kind:
        raise InputError(f"decomposition is over {d.kind} structures, input is a {x.kind}")
    rep = tqd_validate(x, d, strict=not args.lenient)
    a, b = depths(d)
    print(f"{rep.describe()} width={d.width()} structural={a} logical={b}")
    return 0 if rep else 1


def cmd_tqd_from_clique(args):
    t, kind = parse_term(read_text(args.term))
    ev = eval_clique_term(t, kind)
    x = ev.by_tags() if None not in ev.tags else ev.structure
    _emit(print_tqd(tqd_from_clique_term(x, t)), args.output)
    return 0


def cmd_tqd_from_treedec(args):
    x = parse_structure(read_text(args.struct))
    td, n = parse_treedec(read_text(args.td))
    if n != x.n:
        raise InputError(f"tree decomposition is for {n} elements, structure has {x.n}")
    _emit(print_tqd(tqd_from_tree_decomposition(x, td, args.sinks)), args.output)
    return 0


def cmd_clique_from_qrep(args):
    o = _order(args.order)
    q = parse_qrep(read_text(args.qrep))
    _emit(print_term(qrep_to_clique(o, q), "order"), args.output)
    return 0


def cmd_clique_eval(args):
    t, kind = parse_term(read_text(args.term))
    ev = eval_clique_term(t, kind)
    x = ev.by_tags() if None not in ev.tags else ev.structure
    _emit(print_structure(x), args.output)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qorder", description="questionable representations of finite orders")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="classify an order")
    c.add_argument("file")
    c.add_argument("--class", dest="cls", choices=CLASS_NAMES)
    c.set_defaults(func=cmd_check)

    q = sub.add_parser("qrep", help="build or validate representations")
    qs = q.add_subparsers(dest="action", required=True)
    qb = qs.add_parser("build")
    qb.add_argument("file")
    qb.add_argument("--method", default="auto", choices=["auto", "total", "itov", "width2", "identity"])
    qb.add_argument("--strict", action="store_true")
    qb.add_argument("--seed", type=int)
    qb.add_argument("-o", "--output")
    qb.set_defaults(func=cmd_qrep_build)
    qv = qs.add_parser("validate")
    qv.add_argument("order")
    qv.add_argument("qrep")
    qv.add_argument("--strict", action="store_true")
    qv.set_defaults(func=cmd_qrep_validate)

    k = sub.add_parser("count", help="count linear extensions")
    k.add_argument("file")
    k.add_argument("--method", default="auto", choices=["auto", "brute", "trunk", "cedar", "sp"])
    k.set_defaults(func=cmd_count)

    i = sub.add_parser("iso", help="test two orders for isomorphism")
    i.add_argument("a")
    i.add_argument("b")
    i.add_argument("--method", default="auto", choices=["auto", "up-regular", "trunk", "brute"])
    i.set_defaults(func=cmd_iso)

    g = sub.add_parser("gen", help="generate an order or grid")
    g.add_argument("kind", choices=sorted(GEN_ARITY))
    g.add_argument("params", type=int, nargs="*")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--density", type=float, default=0.3)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("tqd", help="tree-questionable decompositions")
    ts = t.add_subparsers(dest="action", required=True)
    tg = ts.add_parser("grid")
    tg.add_argument("p", type=int)
    tg.add_argument("q", type=int)
    tg.add_argument("-o", "--output")
    tg.set_defaults(func=cmd_tqd_grid)
    tv = ts.add_parser("validate")
    tv.add_argument("struct")
    tv.add_argument("tqd")
    tv.add_argument("--lenient", action="store_true",
                    help="accept pairs without a question when their type is the default")
    tv.set_defaults(func=cmd_tqd_validate)
    tc = ts.add_parser("from-clique")
    tc.add_argument("term")
    tc.add_argument("-o", "--output")
    tc.set_defaults(func=cmd_tqd_from_clique)
    tt = ts.add_parser("from-treedec")
    tt.add_argument("struct")
    tt.add_argument("td")
    tt.add_argument("--sinks", default="per-child", choices=["per-child", "single"])
    tt.add_argument("-o", "--output")
    tt.set_defaults(func=cmd_tqd_from_treedec)

    cl = sub.add_parser("clique", help="clique-width terms")
    cs = cl.add_subparsers(dest="action", required=True)
    cq = cs.add_parser("from-qrep")
    cq.add_argument("order")
    cq.add_argument("qrep")
    cq.add_argument("-o", "--output")
    cq.set_defaults(func=cmd_clique_from_qrep)
    ce = cs.add_parser("eval")
    ce.add_argument("term")
    ce.add_argument("-o", "--output")
    ce.set_defaults(func=cmd_clique_eval)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except NEGATIVE as e:
        print(f"negative: {e}", file=sys.stderr)
        return 1
    except (ParseError, InputError, SizeError, OSError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except QOrderError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
