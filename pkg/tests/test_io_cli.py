from __future__ import annotations

import pathlib

import pytest
from hypothesis import given, settings, strategies as st

from qorder.build import build_width2
from qorder.cli import main
from qorder.errors import ParseError
from qorder.generators import random_order, random_sp
from qorder.io import (parse_graph, parse_order, parse_qrep, parse_term, parse_tqd, parse_treedec,
                       print_graph, print_order, print_qrep, print_term, print_tqd, print_treedec)
from qorder.tqd import linear_tqd, qrep_to_clique, tqd_grid

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

ROUND_TRIPS = {
    ".ord": (lambda t: parse_order(t), lambda v: print_order(*v)),
    ".adj": (parse_graph, print_graph),
    ".qrep": (parse_qrep, print_qrep),
    ".tqd": (parse_tqd, print_tqd),
    ".cwt": (parse_term, lambda v: print_term(*v)),
    ".td": (parse_treedec, lambda v: print_treedec(*v)),
}


def fixture_files():
    return sorted(FIXTURES.iterdir())


@pytest.mark.parametrize("path", fixture_files(), ids=lambda p: p.name)
def test_fixture_parse_print_identity(path):
    parse, show = ROUND_TRIPS[path.suffix]
    text = path.read_text()
    value = parse(text)
    assert show(value) == text
    assert parse(show(value)) == value


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.floats(0, 1), st.integers(0, 10**6))
def test_order_and_tqd_round_trip(n, density, seed):
    o = random_order(n, density, seed)
    assert parse_order(print_order(o))[0] == o
    d = linear_tqd(o)
    assert parse_tqd(print_tqd(d)) == d


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**6))
def test_qrep_and_term_round_trip(n, seed):
    o = random_sp(n, seed)
    q = build_width2(o)
    assert parse_qrep(print_qrep(q)) == q
    t = qrep_to_clique(o, q)
    assert parse_term(print_term(t)) == (t, "order")


def test_parse_errors():
    bad = [
        (parse_order, "order 2\nlt 0 1\nlt 1 0\n"),
        (parse_order, "order 2\nlt 0 7\n"),
        (parse_order, "orders 2\n"),
        (parse_order, ""),
        (parse_graph, "graph 2\nedge 0 0\n"),
        (parse_qrep, "qrep n=2 minlen=1\nrank 0 total2\nword 0 0\n"),
        (parse_qrep, "qrep n=1 minlen=1\nrank 0 weird\nword 0 0\n"),
        (parse_tqd, "tqd kind=graph\nnode 0 parent=- run=1\n"),
        (parse_tqd, "tqd kind=graph\nleaf 0 parent=- elem=0\nleaf 1 parent=0 elem=1\n"),
        (parse_term, "cwt kind=order\n(union (make 1))\n"),
        (parse_term, "cwt kind=order\n(make 1\n"),
        (parse_treedec, "treedec 2\nbag 1 parent=- 0\n"),
    ]
    for parse, text in bad:
        with pytest.raises(ParseError):
            parse(text)


def test_comments_and_names():
    o, names = parse_order("# a chain\norder 2\nname 0 low\nlt 0 1  # covers\n")
    assert o.lt(0, 1) and names == {0: "low"}


def run(argv, capsys):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_cli_count(capsys):
    assert run(["count", FIXTURES / "obs1.ord"], capsys) == (0, "6\n")
    assert run(["count", FIXTURES / "obs2.ord", "--method", "brute"], capsys) == (0, "5\n")
    code, _ = run(["count", FIXTURES / "obs2.ord", "--method", "sp"], capsys)
    assert code == 1


def test_cli_check(capsys):
    code, out = run(["check", FIXTURES / "obs2.ord", "--class", "itov"], capsys)
    assert code == 1 and "obs2=" in out
    code, out = run(["check", FIXTURES / "chain3.ord", "--class", "trunk"], capsys)
    assert code == 0 and "profile=1,1,1" in out
    code, out = run(["check", FIXTURES / "obs1.ord"], capsys)
    assert code == 0 and len(out.splitlines()) == 7


def test_cli_qrep_build_validate(tmp_path, capsys):
    out = tmp_path / "out.qrep"
    assert run(["qrep", "build", FIXTURES / "chain3.ord", "--method", "total", "-o", out], capsys)[0] == 0
    assert run(["qrep", "validate", FIXTURES / "chain3.ord", out, "--strict"], capsys) == (0, "pass\n")
    code, text = run(["qrep", "validate", FIXTURES / "obs1.ord", FIXTURES / "chain3.qrep"], capsys)
    assert code == 2
    code, _ = run(["qrep", "build", FIXTURES / "obs1.ord", "--method", "itov"], capsys)
    assert code == 1


def test_cli_iso(capsys):
    assert run(["iso", FIXTURES / "obs2.ord", FIXTURES / "obs2.ord"], capsys)[0] == 0
    assert run(["iso", FIXTURES / "obs1.ord", FIXTURES / "obs2.ord"], capsys)[0] == 1
    assert run(["iso", FIXTURES / "chain3.ord", FIXTURES / "chain3.ord", "--method", "trunk"], capsys)[0] == 0


def test_cli_tqd_and_clique(tmp_path, capsys):
    code, out = run(["tqd", "validate", FIXTURES / "grid43.adj", FIXTURES / "grid43.tqd"], capsys)
    assert code == 0 and out.startswith("pass width=3")
    assert run(["tqd", "validate", FIXTURES / "sp9.ord", FIXTURES / "sp9.tqd"], capsys)[0] == 0
    assert run(["tqd", "validate", FIXTURES / "path5.adj", FIXTURES / "path5.tqd"], capsys)[0] == 0
    assert run(["tqd", "validate", FIXTURES / "star.adj", FIXTURES / "star.tqd"], capsys)[0] == 0
    code, out = run(["clique", "eval", FIXTURES / "sp9.cwt"], capsys)
    assert code == 0 and parse_order(out)[0] == parse_order((FIXTURES / "sp9.ord").read_text())[0]
    single = tmp_path / "single.tqd"
    run(["tqd", "from-treedec", FIXTURES / "star.adj", FIXTURES / "star.td", "--sinks", "single",
         "-o", single], capsys)
    assert run(["tqd", "validate", FIXTURES / "star.adj", single], capsys)[0] == 1
    assert run(["tqd", "validate", FIXTURES / "star.adj", single, "--lenient"], capsys)[0] == 0
    assert run(["tqd", "validate", FIXTURES / "obs1.ord", FIXTURES / "grid43.tqd"], capsys)[0] == 2


def test_cli_gen_deterministic(tmp_path, capsys):
    for kind, params in [("random-sp", [8]), ("random", [7]), ("tw", [5]), ("grid", [3, 2])]:
        a, b = tmp_path / "a", tmp_path / "b"
        run(["gen", kind, *params, "--seed", 11, "-o", a], capsys)
        run(["gen", kind, *params, "--seed", 11, "-o", b], capsys)
        assert a.read_bytes() == b.read_bytes()


def test_cli_input_errors(tmp_path, capsys):
    assert run(["count", tmp_path / "missing.ord"], capsys)[0] == 2
    bad = tmp_path / "bad.ord"
    bad.write_text("order 2\nlt 0 1\nlt 1 0\n")
    assert run(["count", bad], capsys)[0] == 2
    assert run(["gen", "grid", 3], capsys)[0] == 2
    assert run(["nonsense"], capsys)[0] == 2


def test_grid_tqd_print_stable():
    assert print_tqd(tqd_grid(3, 3)) == print_tqd(tqd_grid(3, 3))
