import random

import pytest
from hypothesis import given, strategies as st

from heapcrys.crystal import RppCrystal, all_rpps
from heapcrys.dynkin import build_diagram
from heapcrys.heap import order_ideals
from heapcrys.tableaux import (GtPattern, TableauCrystal, Tableau, TableauError, all_ssyt,
                               gt_of_tableau, random_ssyt, rectangle_heap,
                               rectangular_tableau_of_rpp, rpp_of_rectangular_tableau,
                               schuetzenberger, tableau_of_gt)
from heapcrys.weyl import act, longest_element


def test_gt_worked_example():
    t = Tableau(((1, 1, 3), (2, 2, 4)), 4)
    g = gt_of_tableau(t)
    assert g.rows == ((2,), (2, 2), (3, 2, 0), (3, 3, 0, 0))
    assert g.interlaces()
    assert tableau_of_gt(g) == t


def test_single_box():
    g = gt_of_tableau(Tableau(((1,),), 3))
    assert g.rows == ((1,), (1, 0), (1, 0, 0))


def test_interlacing_violation():
    with pytest.raises(TableauError):
        tableau_of_gt(GtPattern(((3,), (2, 1))))


def test_tableau_validation():
    with pytest.raises(TableauError):
        Tableau(((1, 2), (1, 3)), 3)
    with pytest.raises(TableauError):
        Tableau(((2, 1),), 3)


@given(st.integers(0, 2**32 - 1))
def test_gt_roundtrip_random(seed):
    t = random_ssyt((2, 2), 4, random.Random(seed))
    assert tableau_of_gt(gt_of_tableau(t)) == t


def test_ssyt_counts():
    assert len(list(all_ssyt((1, 1), 4))) == 6
    assert len(list(all_ssyt((2, 2), 4))) == 20
    assert len(list(all_ssyt((2, 1), 3))) == 8


@pytest.mark.parametrize("n,size", [(1, 6), (2, 20)])
def test_rectangular_bijection(n, size):
    h = rectangle_heap(4, 2)
    image = {rpp_of_rectangular_tableau(t, h) for t in all_ssyt((n, n), 4)}
    assert len(image) == size
    assert image == set(all_rpps(h, n))
    if n == 1:
        assert {sum(v << x for x, v in enumerate(phi.values)) for phi in image} == set(order_ideals(h))
    for phi in image:
        assert rpp_of_rectangular_tableau(rectangular_tableau_of_rpp(phi, 4, 2), h) == phi


def test_extreme_tableaux():
    # The twist sends the highest tableau to the lowest RPP.
    h = rectangle_heap(4, 2)
    high = Tableau(((1, 1), (2, 2)), 4)
    low = Tableau(((3, 3), (4, 4)), 4)
    assert rpp_of_rectangular_tableau(high, h).values == (2,) * len(h)
    assert rpp_of_rectangular_tableau(low, h).values == (0,) * len(h)


def test_non_rectangle_rejected():
    with pytest.raises(TableauError):
        rpp_of_rectangular_tableau(Tableau(((1, 1), (2,)), 3))


@pytest.mark.parametrize("m,p", [(5, 2), (5, 3), (6, 4)])
def test_bijection_other_rectangles(m, p):
    h = rectangle_heap(m, p)
    image = {rpp_of_rectangular_tableau(t, h) for t in all_ssyt((1,) * p, m)}
    assert image == set(all_rpps(h, 1))


@pytest.mark.parametrize("n", [1, 2])
def test_crystal_operators_swap(n):
    m, p = 4, 2
    h = rectangle_heap(m, p)
    d = build_diagram("A3")
    rc = RppCrystal(h, d.fundamental_weight(p), n)
    tc = TableauCrystal(m)
    for t in all_ssyt((n,) * p, m):
        for i in (1, 2, 3):
            ft = tc.f(t, i)
            lhs = None if ft is None else rpp_of_rectangular_tableau(ft, h)
            assert lhs == rc.e(rpp_of_rectangular_tableau(t, h), m - i)


def test_schuetzenberger_reverses_chain():
    tc = TableauCrystal(3)
    els = list(all_ssyt((1,), 3))
    xi = schuetzenberger(tc, els)
    assert {b.rows[0][0]: xi[b].rows[0][0] for b in els} == {1: 3, 2: 2, 3: 1}


def test_schuetzenberger_weight_on_a3():
    d = build_diagram("A3")
    h = rectangle_heap(4, 2)
    c = RppCrystal(h, d.fundamental_weight(2), 1)
    xi = schuetzenberger(c, start=c.highest())
    w0 = longest_element(d)
    assert len(xi) == 6
    assert xi[c.highest()].values == (1,) * len(h)
    for b, y in xi.items():
        assert c.wt(y) == act(d, w0, c.wt(b))


def test_schuetzenberger_rejects_disconnected():
    tc = TableauCrystal(3)
    els = list(all_ssyt((1,), 3)) + list(all_ssyt((1, 1), 3))
    with pytest.raises(Exception):
        schuetzenberger(tc, els)
