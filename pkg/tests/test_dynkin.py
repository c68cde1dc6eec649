import numpy as np
import pytest
from hypothesis import given, strategies as st

from heapcrys.dynkin import DiagramError, build_diagram, two_colour_and_orient

TYPES = ["A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8", "A2+A1"]


def test_a3_cartan():
    c = build_diagram("A3").cartan
    assert list(np.diag(c)) == [2, 2, 2]
    assert c[0, 1] == c[1, 2] == -1 and c[0, 2] == 0


def test_d4_branch_vertex():
    d = build_diagram("D4")
    assert sorted(d.neighbours(2)) == [1, 3, 4]


def test_numbering_conventions():
    assert sorted(build_diagram("D5").neighbours(3)) == [2, 4, 5]
    assert sorted(build_diagram("E6").neighbours(3)) == [2, 4, 6]


def test_cycle_rejected():
    with pytest.raises(DiagramError):
        build_diagram({"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3], [3, 1]]})


def test_non_simply_laced_rejected():
    with pytest.raises(DiagramError):
        build_diagram("B3")


@pytest.mark.parametrize("t", TYPES)
def test_cartan_symmetric_nonsingular(t):
    c = build_diagram(t).cartan
    assert (c == c.T).all()
    assert round(abs(np.linalg.det(c))) > 0


def test_pairing_and_reflection():
    d = build_diagram("A3")
    assert d.pairing(d.fundamental_weight(1), 1) == 1
    w2 = d.fundamental_weight(2)
    assert d.reflect(w2, 2) == (1, -1, 1)
    assert d.reflect(w2, 1) == w2


def test_two_colourings():
    c, o = two_colour_and_orient(build_diagram("A2"))
    assert (c[1], c[2]) == ("+", "-") and o.arrows == ((2, 1),)
    c, o = two_colour_and_orient(build_diagram("A3"))
    assert (c[1], c[2], c[3]) == ("+", "-", "+")
    assert set(o.arrows) == {(2, 1), (2, 3)}
    c, _ = two_colour_and_orient(build_diagram("A2+A1"))
    assert (c[1], c[2], c[3]) == ("+", "-", "+")


@pytest.mark.parametrize("t", TYPES)
def test_colouring_proper_and_signs(t):
    d = build_diagram(t)
    c, o = two_colour_and_orient(d)
    for a, b in o.arrows:
        assert c[a] == "-" and c[b] == "+"
        assert o.sign((a, b)) == 1 and o.sign((b, a)) == -1
    assert len(o.arrows) == len(d.sorted_edges())


@given(t=st.sampled_from(TYPES), data=st.data())
def test_reflection_is_involution(t, data):
    d = build_diagram(t)
    lam = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=d.rank, max_size=d.rank)))
    i = data.draw(st.sampled_from(d.vertices))
    assert d.reflect(d.reflect(lam, i), i) == lam
