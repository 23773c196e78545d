import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2cells.coxeter import build_system, system_from_matrix
from a2cells.errors import BondNotThree, NotAnEdge
from a2cells.stars import (
    coset_decompose_left,
    coset_decompose_right,
    left_lower_star,
    left_upper_star,
    noncommuting_pair,
    noncommuting_pairs,
    right_lower_star,
    right_upper_star,
    simple_left_star,
    simple_right_star,
)


@pytest.fixture(scope="module")
def W():
    return system_from_matrix("abc", [[1, 3, 2], [3, 1, 4], [2, 4, 1]])


def test_coset_examples(W):
    w = W.element("abcab")
    outer, inner = coset_decompose_left(w, (0, 1))
    assert outer == W.element("abc") and inner == W.element("ab")
    outer, inner = coset_decompose_left(w, (1, 2))
    assert outer == W.element("ba") and inner == W.element("bcb")
    outer, inner = coset_decompose_left(W.element("bcb"), (1, 2))
    assert outer.is_identity()


def test_star_examples(W):
    w = W.element("abcab")
    assert right_lower_star(w, (0, 1)) == W.element("abca")
    assert right_upper_star(w, (0, 1)) is None
    J = (1, 2)
    assert left_upper_star(w, J) == W.element("cbabcb")
    assert right_lower_star(w, J) == W.element("babc")
    assert left_lower_star(w, J) is None and right_upper_star(w, J) is None
    assert right_upper_star(W.element("a"), (0, 1)) == W.element("ab")


def test_simple_stars(W):
    w = W.element("abcab")
    assert simple_right_star(w, (0, 1)) == W.element("abca")
    assert simple_right_star(W.element("c"), (0, 1)) is None
    assert simple_right_star(W.element("aba"), (0, 1)) is None
    with pytest.raises(BondNotThree):
        simple_right_star(w, (1, 2))


def test_pairs(W):
    assert [(p.s, p.t, p.m) for p in noncommuting_pairs(W)] == [(0, 1, 3), (1, 2, 4)]
    with pytest.raises(NotAnEdge):
        noncommuting_pair(W, 0, 2)


SYSTEMS = ["A:4", "B:4", "H:4", "Ctilde:4", "E:1,2", "I2:inf"]


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_star_laws(data):
    V = build_system(data.draw(st.sampled_from(SYSTEMS)))
    w = V.element(data.draw(st.lists(st.integers(0, V.size - 1), max_size=14)))
    for p in noncommuting_pairs(V):
        outer, inner = coset_decompose_left(w, p)
        assert outer * inner == w and outer.length + inner.length == w.length
        assert not (outer.right_descent_mask() & ((1 << p.s) | (1 << p.t)))
        inner2, outer2 = coset_decompose_right(w, p)
        assert inner2 * outer2 == w and outer2.length + inner2.length == w.length
        for up, down in ((right_upper_star, right_lower_star), (left_upper_star, left_lower_star)):
            u = up(w, p)
            if u is not None:
                assert u.length == w.length + 1
                assert down(u, p) == w
            d = down(w, p)
            if d is not None:
                assert d.length == w.length - 1
                assert up(d, p) == w
        for u in (right_upper_star(w, p), right_lower_star(w, p)):
            if u is not None:
                assert (w.inverse() * u).length == 1
        for u in (left_upper_star(w, p), left_lower_star(w, p)):
            if u is not None:
                assert (u * w.inverse()).length == 1
        if p.m == 3:
            r = simple_right_star(w, p)
            if r is not None:
                assert simple_right_star(r, p) == w
            l = simple_left_star(w, p)
            if l is not None:
                assert l.inverse() == simple_right_star(w.inverse(), p)
