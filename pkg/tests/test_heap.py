import random

import pytest
from hypothesis import given, strategies as st

from heapcrys.dynkin import TwoColouring, build_diagram, two_colour_and_orient
from heapcrys.heap import (HeapError, all_four_colourings, build_heap, check_colouring,
                           four_colouring, good_order_word, is_good_order, order_ideals)
from heapcrys.weyl import commutation_class, dominant_minuscule_words, weak_order_below

DIAMOND = ("A3", "2,3,1,2")


def test_fig1_heap():
    h = build_heap("A4", "3,4,2,3,1,2")
    assert len(h) == 6
    assert [len(h.fibre(i)) for i in (1, 2, 3, 4)] == [1, 2, 2, 1]
    assert h.level[h.fibre(2)[0]] == 1


def test_diamond_structure():
    h = build_heap(*DIAMOND)
    bottom, top = h.fibre(2)
    assert set(h.lower_covers[top]) == {h.bead(1, 1), h.bead(3, 1)}
    for x in (h.bead(1, 1), h.bead(3, 1)):
        assert h.lower_covers[x] == (bottom,)


def test_single_letter_and_non_fc():
    h = build_heap("A3", "2")
    assert len(h) == 1 and h.covers == [] and h.level == (1,)
    with pytest.raises(Exception):
        build_heap("A2", "1,2,1")


def test_ideal_counts():
    assert len(order_ideals(build_heap(*DIAMOND))) == 6
    assert order_ideals(build_heap("A3", "")) == [0]
    assert len(order_ideals(build_heap("A3", "1,2,3"))) == 4


def test_ideal_order_is_canonical():
    ideals = order_ideals(build_heap(*DIAMOND))
    keys = [(bin(m).count("1"), sorted(x for x in range(4) if m >> x & 1)) for m in ideals]
    assert keys == sorted(keys)


@pytest.mark.parametrize("t,ell", [("A4", 12), ("D5", 12), ("E6", 10)])
def test_ideals_match_weak_order(t, ell):
    d = build_diagram(t)
    for w in dominant_minuscule_words(d, ell)[::3]:
        assert len(order_ideals(build_heap(d, w))) == len(weak_order_below(d, w))


@pytest.mark.parametrize("t", ["A4", "D5", "E6"])
def test_ranked_and_fibres_are_chains(t):
    d = build_diagram(t)
    for w in dominant_minuscule_words(d, 10):
        h = build_heap(d, w)
        for (y, x) in h.covers:
            assert h.level[x] == h.level[y] + 1
        for i in d.vertices:
            fib = h.fibre(i)
            assert all(h.less(a, b) for a, b in zip(fib, fib[1:]))


def _labelled(h):
    return (sorted(h.label(x) for x in range(len(h))),
            sorted((h.label(y), h.label(x)) for y, x in h.covers))


@given(seed=st.integers(0, 10**6))
def test_commutation_invariance(seed):
    d = build_diagram("D5")
    w = (5, 3, 2, 4, 1, 3, 2, 5, 3, 4)
    alt = random.Random(seed).choice(sorted(commutation_class(d, w, limit=500)))
    assert _labelled(build_heap(d, w)) == _labelled(build_heap(d, alt))


def test_good_order_examples():
    h = build_heap("A3", "1,2,3")
    assert good_order_word(h) == sorted(range(3), key=lambda x: h.level[x])
    dia = build_heap(*DIAMOND)
    b, t = dia.fibre(2)
    for mid in ([dia.bead(1, 1), dia.bead(3, 1)], [dia.bead(3, 1), dia.bead(1, 1)]):
        assert is_good_order(dia, [b] + mid + [t])
    f1 = build_heap("A4", "3,4,2,3,1,2")
    order = good_order_word(f1)
    assert len(order) == 6 and is_good_order(f1, order)


@pytest.mark.parametrize("t", ["A4", "D4", "D5", "E6"])
def test_good_order_and_colouring_exist(t):
    d = build_diagram(t)
    for w in dominant_minuscule_words(d, 10):
        h = build_heap(d, w)
        assert is_good_order(h, good_order_word(h))
        assert check_colouring(h, four_colouring(h), two_colour_and_orient(d)[0]) == []


def test_triple_cover_heap():
    # the bottom bead on the branch runner is covered by all three neighbours
    h = build_heap("D4", "1,3,4,2")
    assert len(h.upper_covers[h.bead(2, 1)]) == 3
    assert is_good_order(h, good_order_word(h))
    four_colouring(h)


def test_colouring_palettes():
    h = build_heap("A3", "1,2")
    col = four_colouring(h)
    (edge,) = h.covers
    assert col[edge] in ("G", "Y")  # upper bead on the (+) runner 1
    d = build_diagram("A3")
    c = TwoColouring({1: "-", 2: "+", 3: "-"})
    dia = build_heap(d, "2,3,1,2")
    col = four_colouring(dia, c)
    top = dia.fibre(2)[1]
    assert {col[(y, top)] for y in dia.lower_covers[top]} == {"G", "Y"}
    bottom = dia.fibre(2)[0]
    assert {col[(bottom, x)] for x in dia.upper_covers[bottom]} == {"B", "R"}
    assert check_colouring(dia, col, c) == []


def test_all_colourings_valid():
    d = build_diagram("A4")
    h = build_heap(d, "3,4,2,3,1,2")
    c, _ = two_colour_and_orient(d)
    cols = all_four_colourings(h, c)
    assert len(cols) >= 3
    assert all(check_colouring(h, col, c) == [] for col in cols)


def test_non_dominant_colouring_refused():
    four_colouring(build_heap("A3", "1,2,3"))
    # the last 2 is followed by both of its neighbours
    with pytest.raises(HeapError):
        four_colouring(build_heap("A3", "2,1,3"))
