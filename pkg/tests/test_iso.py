from __future__ import annotations

import random

import pytest

from qorder.errors import NotUpRegularError, SizeError
from qorder.generators import (chain, random_trunk, random_up_regular, trunk_with_woodpeckers,
                               zigzag)
from qorder.iso import (find_isomorphism, iso_bruteforce, iso_trunk, iso_up_regular,
                        up_regular_labels)
from qorder.order import FiniteOrder, invert, levels, permute
from qorder.recognition import OBS2_ORDER, OBST_ORDER, trunk_profile

import oracles


def shuffled(o, seed):
    perm = list(range(o.n))
    random.Random(seed).shuffle(perm)
    return permute(o, perm)


def test_iso_trunk_examples():
    assert iso_trunk((2, 3, 1), (2, 3, 1))
    assert not iso_trunk((2, 3), (3, 2))
    o = random_trunk(7, 1)
    assert iso_trunk(trunk_profile(o), trunk_profile(shuffled(o, 2)))


def test_iso_up_regular_examples():
    o = random_up_regular(8, 5)
    assert iso_up_regular(o, o)
    assert iso_up_regular(o, shuffled(o, 9))
    with pytest.raises(NotUpRegularError):
        iso_up_regular(trunk_with_woodpeckers(6), trunk_with_woodpeckers(6))


def test_bruteforce_examples():
    assert iso_bruteforce(OBS2_ORDER, invert(OBS2_ORDER))
    assert iso_bruteforce(zigzag(2), OBS2_ORDER)
    assert not iso_bruteforce(chain(3), OBST_ORDER)
    with pytest.raises(SizeError):
        iso_bruteforce(chain(9), chain(9))


def test_find_isomorphism_is_a_map():
    for s in range(30):
        o = random_up_regular(7, s)
        p = shuffled(o, s + 100)
        f = find_isomorphism(o, p)
        assert f is not None
        for i in range(o.n):
            for j in range(o.n):
                assert o.rel(i, j) == p.rel(f[i], f[j])


def test_bruteforce_agrees_with_permutation_oracle():
    for s in range(40):
        a, b = random_up_regular(6, s), random_up_regular(6, s + 1000)
        assert iso_bruteforce(a, b) == oracles.isomorphic(a, b)


def test_same_label_swap_is_automorphism():
    for s in range(40):
        o = random_up_regular(8, s)
        lv = levels(o).level
        lab = {}
        for x in range(o.n):
            above = [lv[y] for y in range(o.n) if o.lt(x, y)]
            lab[x] = (lv[x], min(above) if above else levels(o).height)
        for x in range(o.n):
            for y in range(x + 1, o.n):
                if lab[x] == lab[y]:
                    perm = list(range(o.n))
                    perm[x], perm[y] = y, x
                    assert permute(o, perm) == o


def test_labels_shape():
    o = random_up_regular(8, 3)
    labels = up_regular_labels(o)
    assert sum(len(g) for g in labels) == o.n
    assert all(g == sorted(g) for g in labels)
