import random

import pytest

from heapcrys.crystal import all_rpps, Rpp
from heapcrys.grassmannian import (SamplingError, c1_c2_all, c1_c2_campaign, example_jfilt,
                                   example_jfilt_counter, filtration, kernel_dim, lemma_identity,
                                   phi_of_module, random_rpp, random_submodule, sample_z_phi,
                                   springer_compare, verify_main_theorem)
from heapcrys.config import Bounds
from heapcrys.dynkin import build_diagram
from heapcrys.preproj import Submodule, build_heap_module, socle_dim_matrix
from heapcrys.weyl import dominant_minuscule_words


def diamond():
    return build_heap_module("A3", "2,3,1,2")


def test_three_copy_example():
    M = example_jfilt()
    f = filtration(M)
    v1 = M.module.heap.bead(2, 1)
    assert f.levels[1].blocks == Submodule.span(M.module, 3, [{(v1, 1): 1}]).blocks
    assert [kernel_dim(Q, 2, 1) for Q in f.quotients] == [1, 1, 1]
    assert kernel_dim(M, 2, 1) == 3
    assert f.is_increasing()


def test_two_copy_inequality():
    N = example_jfilt_counter()
    g = filtration(N)
    direct, total = lemma_identity(N, g)[(2, 1)]
    assert (direct, total) == (1, 2)
    assert not g.is_increasing()


def test_sampler_is_deterministic():
    m = diamond()
    phi = next(p for p in all_rpps(m.heap, 2) if len(set(p.values)) > 1)
    a, b = sample_z_phi(m, phi, 11), sample_z_phi(m, phi, 11)
    assert a.blocks == b.blocks


def test_diamond_n2_hundred_seeds():
    m = diamond()
    for phi in all_rpps(m.heap, 2):
        for seed in range(5):
            M = sample_z_phi(m, phi, seed)
            got, valid = phi_of_module(M)
            assert valid and got == phi
            assert socle_dim_matrix(M).as_rpp(2) == phi
            assert filtration(M).is_increasing()


def test_whole_module_is_constant():
    m = build_heap_module("D5", (5, 3, 2, 4, 1, 3, 2, 5, 3, 4))
    for n in (1, 2):
        phi, valid = phi_of_module(Submodule.whole(m, n))
        assert valid and phi.values == (n,) * len(m.heap)


def test_sampling_error_on_zero_budget():
    m = diamond()
    phi = Rpp(m.heap, (1, 0, 0, 0), 1)
    with pytest.raises(SamplingError):
        sample_z_phi(m, phi, 0, Bounds(retry_budget=0))


def test_c2_implies_c1_on_random_submodules():
    m = diamond()
    rng = random.Random(5)
    for _ in range(60):
        M = random_submodule(m, rng.randint(1, 3), rng, gens=rng.randint(1, 3))
        c1, c2, _ = c1_c2_all(M)
        assert c1 or not c2


def test_c1_implies_c2_small_campaign():
    mods = [build_heap_module("D4", w) for w in dominant_minuscule_words(build_diagram("D4"), 5, 2)]
    rep = c1_c2_campaign(mods, 80, seed=3)
    assert rep.instances == 80 and rep.ok
    assert rep.sampled == rep.arbitrary == 40


def test_random_rpp_is_valid():
    m = build_heap_module("A4", "3,4,2,3,1,2")
    rng = random.Random(0)
    for _ in range(50):
        assert random_rpp(m.heap, 3, rng).is_valid()


@pytest.mark.parametrize("t,w,n", [("A3", "2,3,1,2", 2), ("D4", "1,3,4,2", 2), ("D5", "5,3,2,4,1,3,2,5,3,4", 1)])
def test_main_theorem_small(t, w, n):
    rep = verify_main_theorem(t, w, n=n, seeds=2)
    assert rep.ok, rep.failures[:3]
    assert rep.samples == 2 * rep.rpps


def test_springer_small():
    assert springer_compare(4, 2, 1).ok
    assert springer_compare(4, 1, 2, seeds=2).ok
    rep = springer_compare(4, 2, 2, seeds=2)
    assert rep.ok and rep.checked == 40
