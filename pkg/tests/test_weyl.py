import pytest

from heapcrys.dynkin import build_diagram
from heapcrys.heap import build_heap, order_ideals
from heapcrys.weyl import (WordError, dominant_minuscule_words, is_dominant_minuscule,
                           is_fully_commutative, is_lambda_minuscule, is_minuscule, is_reduced,
                           minimal_coset_rep, minimal_witness, reduced_words, weak_order_below,
                           witnesses, weyl_dimension, commutation_class)


def D(t):
    return build_diagram(t)


def test_is_reduced():
    assert is_reduced(D("A2"), (1, 2, 1))
    assert not is_reduced(D("A2"), (1, 1))
    assert is_reduced(D("A4"), (3, 4, 2, 3, 1, 2))


def test_full_commutativity():
    assert is_fully_commutative(D("A3"), (2, 1, 3, 2))
    assert not is_fully_commutative(D("A2"), (1, 2, 1))
    assert is_fully_commutative(D("A4"), (3, 4, 2, 3, 1, 2))


def test_minuscule_examples():
    assert not is_minuscule(D("D4"), (2, 1, 3, 4, 2))
    assert is_dominant_minuscule(D("D5"), (5, 3, 2, 4, 1, 3, 2, 5, 3, 4))
    a4 = D("A4")
    w = (3, 4, 2, 3, 1, 2)
    assert is_dominant_minuscule(a4, w)
    assert is_lambda_minuscule(a4, w, minimal_witness(a4, w))


def test_witnesses():
    d4 = D("D4")
    assert witnesses(d4, (1, 3, 4, 2)) == (d4.fundamental_weight(2), frozenset())
    a3 = D("A3")
    assert witnesses(a3, (2, 3, 1, 2))[0] == a3.fundamental_weight(2)
    lam, free = witnesses(D("A4"), (2,))
    assert lam == (0, 1, 0, 0) and free == {1, 3, 4}
    with pytest.raises(WordError):
        witnesses(d4, (2, 1, 3, 4, 2))


def test_minimal_coset_rep():
    a3 = D("A3")
    w = minimal_coset_rep(a3, {1, 3})
    assert len(w) == 4 and w in commutation_class(a3, (2, 3, 1, 2))
    assert minimal_coset_rep(a3, {1, 2, 3}) == ()
    a4 = D("A4")
    w = minimal_coset_rep(a4, {1, 3, 4})
    assert len(w) == 6 and w in commutation_class(a4, (3, 4, 2, 3, 1, 2))


@pytest.mark.parametrize("t", ["A4", "D4", "D5"])
def test_lambda_min_prefix_chain(t):
    d = D(t)
    for w in dominant_minuscule_words(d, 10):
        assert is_lambda_minuscule(d, w, minimal_witness(d, w))


@pytest.mark.parametrize("t,max_len", [("A4", 10), ("D4", 10), ("D5", 8)])
def test_stembridge_criteria_agree(t, max_len):
    d = D(t)
    for w in reduced_words(d, max_len):
        assert is_lambda_minuscule(d, w, minimal_witness(d, w)) == is_dominant_minuscule(d, w), w


def test_dominant_minuscule_enumeration_counts():
    # frozen from an independent run of the suffix-growing enumerator
    assert [len(dominant_minuscule_words(D(t), 9)) for t in ("A3", "A4", "D4")] == [12, 33, 36]


@pytest.mark.parametrize("t", ["A4", "D5"])
def test_weak_order_graded_and_matches_ideals(t):
    d = D(t)
    for w in dominant_minuscule_words(d, 8)[::5]:
        below = weak_order_below(d, w)
        ideals = order_ideals(build_heap(d, w))
        assert len(below) == len(ideals)
        sizes = sorted(bin(m).count("1") for m in ideals)
        assert sizes == sorted(below.values())


def test_weyl_dimension_oracle():
    a3 = D("A3")
    assert weyl_dimension(a3, (0, 2, 0)) == 20
    assert weyl_dimension(D("D4"), (1, 0, 0, 0)) == 8
    assert weyl_dimension(D("E6"), (1, 0, 0, 0, 0, 0)) == 27
