import random

import pytest
from hypothesis import given, strategies as st

from heapcrys.crystal import Rpp, RppCrystal, all_rpps, rpp_chain
from heapcrys.dynkin import build_diagram
from heapcrys.heap import build_heap, order_ideals
from heapcrys.toggles import (ActionContext, ToggleError, cactus_action, cactus_relation_failures,
                              check_conjectures, check_identity, evaluate, parse_expression,
                              runner_toggle, toggle_ideal, toggle_rpp, toggle_rpp_by_chain)
from heapcrys.weyl import act, dominant_minuscule_words


def test_isolated_bead_flips():
    h = build_heap(build_diagram("A1"), (1,))
    assert toggle_rpp(Rpp(h, (0,), 1), 0).values == (1,)
    assert toggle_rpp(Rpp(h, (1,), 1), 0).values == (0,)


def test_chain_hand_value():
    h = build_heap(build_diagram("A3"), (1, 2, 3))
    bottom, mid, top = h.bead(3, 1), h.bead(2, 1), h.bead(1, 1)
    vals = [0] * 3
    vals[bottom], vals[mid], vals[top] = 2, 1, 0
    out = toggle_rpp(Rpp(h, tuple(vals), 2), mid)
    assert out.values[mid] == 0 + 2 - 1 == 1


def _cases():
    d = build_diagram("A4")
    return [(d, w) for w in dominant_minuscule_words(d, 6)[::3]]


@given(st.data())
def test_toggle_involution_and_chain_agree(data):
    d, w = data.draw(st.sampled_from(_cases()))
    h = build_heap(d, w)
    n = data.draw(st.integers(1, 3))
    rpps = list(all_rpps(h, n))
    phi = data.draw(st.sampled_from(rpps))
    x = data.draw(st.integers(0, len(h) - 1))
    once = toggle_rpp(phi, x)
    assert toggle_rpp(once, x) == phi
    assert once == toggle_rpp_by_chain(phi, x)


def test_toggle_ideal_matches():
    h = build_heap(build_diagram("A3"), "2,3,1,2")
    ideals = set(order_ideals(h))
    for m in ideals:
        for x in range(len(h)):
            t = toggle_ideal(h, m, x)
            assert t in ideals and toggle_ideal(h, t, x) == m


def test_runner_toggles_on_diamond():
    d = build_diagram("A3")
    lam = d.fundamental_weight(2)
    h = build_heap(d, "2,3,1,2")
    for n in (1, 2):
        c = RppCrystal(h, lam, n)
        for phi in all_rpps(h, n):
            for i in d.vertices:
                t = runner_toggle(phi, i)
                assert runner_toggle(t, i) == phi
                assert c.wt(t) == act(d, (i,), c.wt(phi))


@pytest.mark.parametrize("t,k,n", [("A4", 2, 2), ("D4", 1, 2), ("D5", 5, 1)])
def test_weight_equivariance_full_heaps(t, k, n):
    d = build_diagram(t)
    ctx = ActionContext(d, d.fundamental_weight(k), n)
    for i in d.vertices:
        perm = ctx.toggle(i)
        for b, y in perm.items():
            assert ctx.crystal.wt(y) == act(d, (i,), ctx.crystal.wt(b))


def test_equivariance_fails_off_full_heaps():
    d = build_diagram("A3")
    h = build_heap(d, (1,))
    phi = Rpp(h, (1,), 1)
    lam = d.fundamental_weight(1)
    assert runner_toggle(phi, 2) == phi
    assert phi.wt(lam) != act(d, (2,), phi.wt(lam))


def test_single_vertex_cactus_reverses_strings():
    d = build_diagram("A3")
    ctx = ActionContext(d, d.fundamental_weight(2), 2)
    c = ctx.crystal
    for i in d.vertices:
        s = ctx.cactus({i})
        for b in ctx.elements:
            k = c.phi(b, i) - c.eps(b, i)
            y = b
            for _ in range(abs(k)):
                y = c.f(y, i) if k > 0 else c.e(y, i)
            assert s[b] == y


def test_cactus_relations():
    for t, k in (("A3", 2), ("D4", 1)):
        d = build_diagram(t)
        assert cactus_relation_failures(ActionContext(d, d.fundamental_weight(k), 1)) == []


def test_cactus_rejects_bad_subsets():
    d = build_diagram("A3")
    ctx = ActionContext(d, d.fundamental_weight(2), 1)
    with pytest.raises(ToggleError):
        cactus_action(ctx.crystal, ctx.elements, {1, 3})
    with pytest.raises(ToggleError):
        cactus_action(ctx.crystal, ctx.elements, set())


def test_parse_expression():
    assert parse_expression("t4 t2 s{1,2} s3") == [
        ("t", 4), ("t", 2), ("s", frozenset({1, 2})), ("s", frozenset({3}))]
    assert parse_expression("s12") == [("s", frozenset({1, 2}))]
    with pytest.raises(ToggleError):
        parse_expression("x1")


def test_evaluate_order():
    d = build_diagram("A3")
    ctx = ActionContext(d, d.fundamental_weight(2), 1)
    ab = evaluate(ctx, "t1 t2")
    t1, t2 = ctx.toggle(1), ctx.toggle(2)
    assert all(ab[b] == t1[t2[b]] for b in ctx.elements)


def test_d4_identities():
    d = build_diagram("D4")
    res = {(r.lhs, r.rhs, r.n): r.equal for r in check_conjectures(d, d.fundamental_weight(1), 2)}
    assert res[("t3", "s3", 1)] and res[("t4", "s4", 1)]
    assert res[("t4 t2 t4 t2 t4", "s2", 1)] and res[("t4 t2 t4 t2 t4", "s2", 2)]
    # At n=1 the single bead on runner 1 toggles like s1; at n=2 they differ.
    assert res[("t1", "s1", 1)]
    assert not res[("t1", "s1", 2)]


def test_identity_witness():
    d = build_diagram("D4")
    ctx = ActionContext(d, d.fundamental_weight(1), 2)
    r = check_identity(ctx, "t1", "s1")
    assert not r.equal and r.witness in ctx.elements
    assert r.to_json()["status"] == "UNEQUAL"
