from __future__ import annotations

import itertools
import random

import pytest

from qorder.build import build_itov_total_binary, build_total_strict_binary, build_width2, strictify
from qorder.errors import (CoverageError, InvalidDecompositionError, LabelError, NotCompactError,
                           ValidationError)
from qorder.generators import chain, grid, random_itov, random_sp
from qorder.recognition import OBS1_ORDER
from qorder.structures import AdjacencyStructure, as_structure
from qorder.tqd import (Add, Make, Mapping, Relabel, TQDecomposition, TreeDecomposition, Union,
                        check_tree_decomposition, clique_depth_bound, depths,
                        elimination_decomposition, eval_clique_term, grid_depth_bounds, is_compact,
                        linear_tqd, path_decomposition, qrep_to_clique, term_depth, term_labels,
                        tqd_from_clique_term, tqd_from_qrep, tqd_from_tree_decomposition,
                        tqd_grid, tqd_validate)
from qorder.words import QuestionableRepresentation

CHAIN2_TERM = Add(1, 2, "LT", Union(Make(1), Make(2)))


def test_eval_examples():
    assert eval_clique_term(CHAIN2_TERM).structure == as_structure(chain(2))
    anti = eval_clique_term(Union(Make(1), Union(Make(1), Make(2)))).structure
    assert anti.pairs() == []
    q = build_width2(OBS1_ORDER)
    t = qrep_to_clique(OBS1_ORDER, q)
    assert eval_clique_term(t).by_tags() == as_structure(OBS1_ORDER)
    assert max(term_labels(t)) <= 2


def test_eval_label_errors():
    with pytest.raises(LabelError):
        eval_clique_term(Add(1, 1, "LT", Make(1)))
    with pytest.raises(LabelError):
        eval_clique_term(Make(0))
    with pytest.raises(LabelError):
        eval_clique_term(Add(1, 2, "EDGE", Union(Make(1), Make(2))), "order")


def test_relabel_merges_classes():
    t = Add(1, 2, "EDGE", Union(Relabel(2, 1, Union(Make(1), Make(2))), Make(2)))
    s = eval_clique_term(t, "graph").structure
    assert sorted(s.edges()) == [(0, 2), (1, 2)]


def test_chain2_depth_bound():
    q = build_total_strict_binary(chain(2))
    t = qrep_to_clique(chain(2), q)
    assert eval_clique_term(t).by_tags() == as_structure(chain(2))
    assert term_depth(t) <= clique_depth_bound(2, 2, 2)


def test_qrep_to_clique_rejects_invalid():
    q = QuestionableRepresentation(build_width2(chain(2)).alphabet, ((1,), (0,)))
    with pytest.raises(ValidationError):
        qrep_to_clique(chain(2), q)


def test_qrep_to_clique_random_sp():
    for s in range(200):
        o = random_sp(1 + s % 10, s)
        q = build_width2(o)
        t = qrep_to_clique(o, q)
        assert eval_clique_term(t).by_tags() == as_structure(o)
        assert max(term_labels(t)) <= 2
        l = strictify(o, q).length
        assert term_depth(t) <= clique_depth_bound(2, l, o.n)
        assert is_compact(t)


def test_qrep_to_clique_wider_alphabets():
    for s in range(40):
        o = random_itov(1 + s % 9, s)
        q = build_itov_total_binary(o)
        t = qrep_to_clique(o, q)
        assert eval_clique_term(t).by_tags() == as_structure(o)


EDGE = AdjacencyStructure.graph(2, [(0, 1)])


def one_node(x_n, run):
    d = TQDecomposition("graph")
    root = d.add_node(None, run)
    for e in range(x_n):
        d.add_leaf(root, e)
    return d


def test_validate_examples():
    ok = one_node(2, [Mapping.of({0: 0, 1: 1}, EDGE)])
    assert tqd_validate(EDGE, ok)
    same = one_node(2, [Mapping.of({0: 0, 1: 0}, EDGE)])
    rep = tqd_validate(EDGE, same)
    assert not rep and rep.reason == "no question"
    assert tqd_validate(grid(4, 3), tqd_grid(4, 3))
    with pytest.raises(CoverageError):
        tqd_validate(AdjacencyStructure.graph(3, []), ok)


def test_validate_wrong_type():
    d = one_node(2, [Mapping.of({0: 0, 1: 1}, AdjacencyStructure.empty("graph", 2))])
    rep = tqd_validate(EDGE, d)
    assert not rep and "question gives NONE" in rep.reason


def test_validate_lenient_default():
    none = AdjacencyStructure.graph(2, [])
    same = one_node(2, [Mapping.of({0: 0, 1: 0}, EDGE)])
    assert not tqd_validate(none, same)
    assert tqd_validate(none, same, strict=False)
    assert not tqd_validate(EDGE, same, strict=False)


def test_depths_single_node():
    d = one_node(2, [Mapping.of({0: 0, 1: 1}, EDGE)])
    assert depths(d) == (2, 1)


def test_qrep_as_tqd_validates():
    for s in range(60):
        o = random_sp(2 + s % 9, s)
        d = tqd_from_qrep(o, build_width2(o))
        assert tqd_validate(o, d)
        assert depths(d)[0] == 2


def path_graph(n):
    return AdjacencyStructure.graph(n, [(i, i + 1) for i in range(n - 1)])


def test_treedec_path():
    for n in range(2, 9):
        x = path_graph(n)
        td = path_decomposition(n, 2)
        d = tqd_from_tree_decomposition(x, td)
        assert tqd_validate(x, d)
        assert d.width() <= td.width + 3
        a, b = depths(d)
        assert a <= td.depth() + 1 and b <= td.depth()


def test_treedec_triangle_single_bag():
    x = AdjacencyStructure.graph(3, [(0, 1), (1, 2), (0, 2)])
    d = tqd_from_tree_decomposition(x, TreeDecomposition([None], [{0, 1, 2}]))
    internal = [v for v in range(d.size) if not d.is_leaf(v)]
    assert len(internal) == 1
    assert tqd_validate(x, d)


def test_treedec_grid():
    x = grid(3, 3)
    td = path_decomposition(9, 4)
    assert td.width == 3
    check_tree_decomposition(x, td)
    d = tqd_from_tree_decomposition(x, td)
    assert tqd_validate(x, d)
    assert d.width() <= 5


def test_treedec_invalid():
    x = path_graph(3)
    with pytest.raises(InvalidDecompositionError):
        tqd_from_tree_decomposition(x, TreeDecomposition([None, 0], [{0, 1}, {2}]))
    with pytest.raises(InvalidDecompositionError):
        check_tree_decomposition(x, TreeDecomposition([None, 0, 1], [{0, 1}, {1, 2}, {0}]))


STAR = AdjacencyStructure.graph(4, [(0, 1), (0, 2), (0, 3)])
STAR_TD = TreeDecomposition([None, 0, 0, 0], [{0}, {0, 1}, {0, 2}, {0, 3}])


def test_single_sink_leaves_sibling_pairs_without_question():
    d = tqd_from_tree_decomposition(STAR, STAR_TD, sinks="single")
    rep = tqd_validate(STAR, d)
    assert not rep and rep.reason == "no question"
    assert tqd_validate(STAR, d, strict=False)
    assert d.width() <= STAR_TD.width + 2


def test_per_child_sinks_validate_strictly():
    d = tqd_from_tree_decomposition(STAR, STAR_TD)
    assert tqd_validate(STAR, d)
    assert d.width() == 1 + 3


def test_treedec_random_graphs():
    for s in range(40):
        rng = random.Random(s)
        n = rng.randint(2, 9)
        g = AdjacencyStructure.graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                         if rng.random() < 0.35])
        order = list(range(n))
        rng.shuffle(order)
        td = elimination_decomposition(g, order)
        check_tree_decomposition(g, td)
        d = tqd_from_tree_decomposition(g, td)
        assert tqd_validate(g, d)
        a, b = depths(d)
        assert a <= td.depth() + 1 and b <= td.depth()
        single = tqd_from_tree_decomposition(g, td, sinks="single")
        assert tqd_validate(g, single, strict=False)
        assert single.width() <= td.width + 2


def test_clique_term_chain2():
    d = tqd_from_clique_term(chain(2), CHAIN2_TERM)
    internal = [v for v in range(d.size) if not d.is_leaf(v)]
    assert len(internal) == 1 and len(d.runs[internal[0]]) == 1
    assert d.width() == 2 * 2  # two labels per side
    assert tqd_validate(chain(2), d)


def test_clique_term_cograph_obs1():
    left = Add(1, 2, "LT", Union(Make(1), Make(2)))
    t = Union(left, left)
    d = tqd_from_clique_term(OBS1_ORDER, t)
    assert tqd_validate(OBS1_ORDER, d)
    assert d.bijective()
    a, b = depths(d)
    assert a <= term_depth(t) and b <= term_depth(t) - 1


def test_clique_term_from_qrep_validates():
    for s in range(100):
        o = random_sp(1 + s % 10, s)
        t = qrep_to_clique(o, build_width2(o))
        d = tqd_from_clique_term(o, t)
        assert tqd_validate(o, d)
        k = max(term_labels(t))
        a, b = depths(d)
        assert d.width() <= 2 * k and a <= term_depth(t) and b <= term_depth(t) - 1


def test_not_compact():
    t = Add(1, 2, "LT", Relabel(3, 2, Union(Make(1), Make(3))))
    assert not is_compact(t)
    with pytest.raises(NotCompactError):
        tqd_from_clique_term(chain(2), t)
    # an ADD that links two vertices on the same side of its union
    inner = Union(Make(1), Make(2))
    t2 = Add(1, 2, "LT", Union(inner, Make(3)))
    x = eval_clique_term(t2).structure
    with pytest.raises(NotCompactError):
        tqd_from_clique_term(x, t2)


def test_grid_examples():
    d = tqd_grid(1, 2)
    assert sum(1 for v in range(d.size) if not d.is_leaf(v)) == 1 and d.width() == 2
    assert depths(tqd_grid(4, 1))[0] <= 3
    d = tqd_grid(5, 4)
    assert tqd_validate(grid(5, 4), d) and d.width() == 3


def test_grid_bounds_larger():
    for p, q in [(7, 3), (3, 8), (8, 8), (1, 12), (12, 1), (9, 5)]:
        d = tqd_grid(p, q)
        assert tqd_validate(grid(p, q), d)
        a, b = depths(d)
        ba, bb = grid_depth_bounds(p, q)
        assert d.width() <= 3 and d.bijective()
        assert a <= ba and b <= bb


def test_depth_sanity_bounds():
    cases = [(grid(p, q), tqd_grid(p, q)) for p in range(1, 5) for q in range(1, 5) if p * q >= 2]
    cases += [(as_structure(o), linear_tqd(o)) for o in (random_sp(6, s) for s in range(10))]
    for x, d in cases:
        a, b = depths(d)
        assert a <= x.n and b <= x.n ** 2


def test_linear_tqd_all_small_structures():
    for kind, types in (("graph", ["EDGE", "NONE"]), ("order", ["LT", "GT", "INC"])):
        for n in range(1, 5):
            pairs = list(itertools.combinations(range(n), 2))
            for ts in itertools.product(types, repeat=len(pairs)):
                x = AdjacencyStructure.from_pairs(
                    kind, n, [(i, j, t) for (i, j), t in zip(pairs, ts) if t != types[-1]])
                d = linear_tqd(x)
                assert tqd_validate(x, d) and d.width() <= 2
