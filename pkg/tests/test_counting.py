from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from qorder.counting import (count_auto, count_bruteforce, count_cedar, count_disconnected,
                             count_sp, count_sp_tree, count_trunk, count_with_method,
                             cedar_table, fusion)
from qorder.errors import NotCedarError, NotSeriesParallelError, SizeError
from qorder.generators import (all_posets_upto, cedar_order, chain, disjoint_union, random_cedar,
                               random_order, random_sp, trunk_order)
from qorder.order import FiniteOrder, from_relations
from qorder.recognition import OBS1_ORDER, OBS2_ORDER, SPTree

import oracles

# frozen from the permutation oracle (see test_frozen_values_match_oracle)
LE_OBS1 = 6
LE_OBS2 = 5
LE_T3U = 3
LE_PROFILE_23 = 12
# 17-element cedar: 7-chain with 5, 4 and 1 side elements on levels 3, 4, 5;
# frozen from the memoized brute-force counter
LE_BIG_CEDAR = 1210809600

T3U = from_relations(4, [(0, 1), (1, 2), (0, 3)])


def test_frozen_values_match_oracle():
    assert oracles.linear_extensions(OBS1_ORDER) == LE_OBS1
    assert oracles.linear_extensions(OBS2_ORDER) == LE_OBS2
    assert oracles.linear_extensions(T3U) == LE_T3U
    assert oracles.linear_extensions(trunk_order((2, 3))) == LE_PROFILE_23
    assert oracles.interleavings(2, 2) == 6


def test_fusion_examples():
    assert fusion(3, 0) == 1
    assert fusion(4, 1) == 5
    assert fusion(2, 2) == 6
    with pytest.raises(ValueError):
        fusion(-1, 2)


def test_fusion_symmetric_and_enumerated():
    for p in range(25):
        for q in range(25 - p):
            assert fusion(p, q) == fusion(q, p)
            if p + q <= 12:
                assert fusion(p, q) == oracles.interleavings(p, q)


def test_trunk_examples():
    assert count_trunk((1, 1, 1)) == 1
    assert count_trunk((4,)) == 24
    assert count_trunk((2, 3)) == LE_PROFILE_23


def test_disconnected_examples():
    assert count_disconnected([(7, 4)]) == 7
    assert count_disconnected([(1, 1), (1, 1)]) == 2
    assert count_disconnected([(1, 2), (1, 2)]) == LE_OBS1


def test_cedar_examples():
    for p in [(1, 2), (3,), (2, 1, 2)]:
        assert count_cedar(trunk_order(p)) == count_trunk(p)
    assert count_cedar(T3U) == LE_T3U
    big = cedar_order([1] * 7, [3] * 5 + [4] * 4 + [5])
    assert count_cedar(big) == LE_BIG_CEDAR
    assert sum(cedar_table(big).values()) == LE_BIG_CEDAR
    with pytest.raises(NotCedarError):
        count_cedar(OBS2_ORDER)


def test_cedar_random_against_brute():
    for s in range(60):
        o = random_cedar(1 + s % 10, s)
        assert count_cedar(o) == count_bruteforce(o)


def test_sp_examples():
    assert count_sp(chain(5)) == 1
    assert count_sp(OBS1_ORDER) == LE_OBS1
    with pytest.raises(NotSeriesParallelError):
        count_sp(OBS2_ORDER)
    a, b = SPTree.leaf(0), SPTree.leaf(1)
    assert count_sp_tree(SPTree.node("series", [a, b])) == 1
    c1 = SPTree.node("series", [SPTree.leaf(0), SPTree.leaf(1), SPTree.leaf(2)])
    c2 = SPTree.node("series", [SPTree.leaf(3), SPTree.leaf(4)])
    assert count_sp_tree(SPTree.node("parallel", [c1, c2])) == fusion(3, 2)


def test_bruteforce_examples():
    assert count_bruteforce(FiniteOrder.antichain(4)) == 24
    assert count_bruteforce(OBS2_ORDER) == LE_OBS2
    assert count_bruteforce(chain(5)) == 1
    with pytest.raises(SizeError):
        count_bruteforce(FiniteOrder.antichain(12))


def test_bruteforce_matches_permutations():
    for o in all_posets_upto(5):
        assert count_bruteforce(o) == oracles.linear_extensions(o)


def test_auto_paths():
    assert count_with_method(trunk_order((2, 3))) == (12, "trunk")
    assert count_with_method(OBS1_ORDER) == (6, "sp")
    assert count_with_method(T3U)[1] == "cedar"
    assert count_with_method(OBS2_ORDER) == (5, "brute")
    two = disjoint_union([OBS2_ORDER, OBS2_ORDER])
    c, m = count_with_method(two)
    assert m == "components" and c == 25 * fusion(4, 4)
    assert count_auto(FiniteOrder.antichain(0)) == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_methods_agree(n, density, seed):
    o = random_order(n, density, seed)
    want = count_bruteforce(o)
    assert count_auto(o) == want
    try:
        assert count_sp(o) == want
    except NotSeriesParallelError:
        pass
    try:
        assert count_cedar(o) == want
    except NotCedarError:
        pass


def test_sp_random_against_brute():
    for s in range(60):
        o = random_sp(1 + s % 8, s)
        assert count_sp(o) == count_bruteforce(o)
