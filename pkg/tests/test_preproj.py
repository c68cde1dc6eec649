import numpy as np
import pytest

from heapcrys.crystal import all_rpps
from heapcrys.dynkin import build_diagram
from heapcrys.grassmannian import phi_of_module, sample_z_phi
from heapcrys.heap import all_four_colourings, build_heap, order_ideals
from heapcrys.preproj import (ModuleError, Submodule, build_heap_module, coordinate_submodules,
                              f2_coordinate_mask, f2_submodules, ideal_submodule, shift_matrix,
                              shift_path, socle_and_hull_checks, socle_dim_matrix)
from heapcrys.weyl import dominant_minuscule_words

D5_WORD = (5, 3, 2, 4, 1, 3, 2, 5, 3, 4)


def diamond():
    return build_heap_module("A3", "2,3,1,2")


def test_diamond_matrices():
    m = diamond()
    assert m.two_colouring.colour == {1: "+", 2: "-", 3: "+"}
    got = {a: mat.tolist() for a, mat in m.arrows.items()}
    assert got[(1, 2)] == [[1], [0]] and got[(3, 2)] == [[1], [0]]
    assert got[(2, 1)] == [[0, 1]] and got[(2, 3)] == [[0, -1]]
    assert m.relation_holds()


def test_d5_fixture_relation():
    m = build_heap_module("D5", D5_WORD)
    assert all(not r.any() for r in m.residuals().values())


def test_d4_refusal():
    with pytest.raises(ModuleError, match="2"):
        build_heap_module("D4", (2, 1, 3, 4, 2))


@pytest.mark.parametrize("t,ell", [("A4", 9), ("D5", 9), ("E6", 12)])
def test_relation_on_dominant_minuscule(t, ell):
    d = build_diagram(t)
    words = dominant_minuscule_words(d, ell)
    for w in words[:: max(1, len(words) // 40)]:
        assert build_heap_module(d, w).relation_holds(), w


def test_triple_cover_heaps_build():
    for t, w in (("D4", (1, 3, 4, 2)), ("D5", (2, 4, 5, 3)), ("E6", (2, 4, 6, 3))):
        d = build_diagram(t)
        assert w in [tuple(x) for x in dominant_minuscule_words(d, len(w))]
        assert build_heap_module(d, w).relation_holds()


def test_d5_socle_and_hull():
    rep = socle_and_hull_checks(build_heap_module("D5", D5_WORD))
    assert rep.ok
    assert len(rep.socle_vertices) == 1
    assert rep.dim_vector == {1: 1, 2: 2, 3: 3, 4: 2, 5: 2}


def test_chain_socle():
    rep = socle_and_hull_checks(build_heap_module("A2", "1,2"))
    assert rep.ok and rep.socle_vertices == [2]


def test_dim_vector_is_fibre_sizes():
    m = build_heap_module("D5", D5_WORD)
    assert m.dim_vector == {i: len(m.heap.fibre(i)) for i in m.diagram.vertices}


def test_ideal_submodules():
    m = diamond()
    h = m.heap
    assert ideal_submodule(m, 0).dim == 0
    assert ideal_submodule(m, h.full_mask) == Submodule.whole(m, 1)
    for mask in order_ideals(h):
        assert ideal_submodule(m, mask).is_closed()
    assert not ideal_submodule(m, 1 << h.bead(2, 2)).is_closed()
    assert sorted(coordinate_submodules(m)) == sorted(order_ideals(h))
    assert len(coordinate_submodules(m)) == 6


def test_f2_oracle_on_diamond():
    m = diamond()
    subs = f2_submodules(m)
    coords = {f2_coordinate_mask(m, s) for s in subs} - {None}
    assert coords == set(order_ideals(m.heap))


@pytest.mark.parametrize("t,w", [("A3", "2,3,1,2"), ("D5", D5_WORD), ("A4", "3,4,2,3,1,2")])
def test_socle_dim_matrix_whole_and_zero(t, w):
    m = build_heap_module(t, w)
    sd = socle_dim_matrix(Submodule.whole(m, 1))
    assert sd.on_heap() == (1,) * len(m.heap) and sd.outside() == {}
    assert all(v == 0 for v in socle_dim_matrix(Submodule.zero(m, 1)).values.values())


def test_socle_dim_matrix_of_ideals():
    m = build_heap_module("A4", "3,4,2,3,1,2")
    for mask in order_ideals(m.heap):
        sd = socle_dim_matrix(ideal_submodule(m, mask))
        assert sd.on_heap() == tuple(mask >> x & 1 for x in range(len(m.heap)))
        assert sd.outside() == {}


@pytest.mark.parametrize("t,w", [("A3", "2,3,1,2"), ("D5", D5_WORD), ("D4", "1,3,4,2")])
def test_shift_path(t, w):
    m = build_heap_module(t, w)
    for i in m.diagram.vertices:
        combo = shift_path(m, i)
        if len(m.heap.fibre(i)) <= 1:
            assert combo == []
            continue
        total = sum(c * m.path_matrix(walk).astype(object) for c, walk in combo)
        assert (np.asarray(total) == shift_matrix(m, i)).all()


def test_colouring_independence():
    h = build_heap(build_diagram("A4"), "3,4,2,3,1,2")
    cols = all_four_colourings(h)[:4]
    assert len(cols) >= 3
    mods = [build_heap_module(h, colouring=c) for c in cols]
    assert all(m.relation_holds() for m in mods)
    for phi in list(all_rpps(h, 2))[::4]:
        for seed in range(2):
            got = {phi_of_module(sample_z_phi(m, phi, seed))[0] for m in mods}
            assert got == {phi}


def test_to_json_roundtrip_fields():
    js = diamond().to_json()
    assert js["type"] == "A3" and js["dimension_vector"] == {"1": 1, "2": 2, "3": 1}
    assert len(js["arrows"]) == 4
