import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2cells.coxeter import build_system, system_from_matrix
from a2cells.errors import NotA2Finite, NotFC, NotReduced
from a2cells.heaps import (
    MORE,
    cartier_foata,
    display_word,
    fc_a_classify,
    heap_of_word,
    heap_to_dot,
    is_fc,
    is_fc_reduced_word,
    is_fc_word_criterion,
    right_lower_star_heap_test,
    width,
    width_bruteforce,
)
from a2cells.stars import noncommuting_pairs, right_lower_star


@pytest.fixture(scope="module")
def abcd():
    # a-b heavy (4), then a simple path b-c-d
    return system_from_matrix("abcd", [[1, 4, 2, 2], [4, 1, 3, 2], [2, 3, 1, 3], [2, 2, 3, 1]])


def test_heap_of_abcadb(abcd):
    h = heap_of_word(abcd, abcd.parse_word("abcadb"))
    assert h.size == 6
    assert set(h.covers()) == {(0, 1), (1, 3), (1, 2), (3, 5), (2, 5), (2, 4)}
    labelled = {(h.label(i), h.label(j)) for i, j in h.covers()}
    assert labelled == {("a", "b"), ("b", "a"), ("b", "c"), ("a", "b"), ("c", "b"), ("c", "d")}
    assert is_fc_reduced_word(abcd, abcd.parse_word("abcadb"))


def test_lower_stars_of_abcadb(abcd):
    w = abcd.element("abcadb")
    defined = []
    for p in noncommuting_pairs(abcd):
        for s, t in ((p.s, p.t), (p.t, p.s)):
            if right_lower_star_heap_test(w, s, t):
                defined.append((abcd.labels[s], abcd.labels[t]))
    assert defined == [("b", "a")]
    assert right_lower_star(w, (0, 1)) == abcd.element("abcad")


def test_antichain_heap():
    W = build_system("A:5")
    h = heap_of_word(W, W.parse_word("135"))
    assert h.covers() == [] and width(h) == 3


def test_a5_extremes():
    W = build_system("A:5")
    h = heap_of_word(W, W.parse_word("1532"))
    assert {h.label(i) for i in h.minimal()} == {"1", "3", "5"}
    assert {h.label(i) for i in h.maximal()} == {"2", "5"}


def test_fc_examples():
    A4 = build_system("A:4")
    assert not is_fc(A4.element("1241"))
    assert not is_fc(build_system("A:2").element("121"))
    with pytest.raises(NotReduced):
        is_fc_reduced_word(A4, (0, 0))


def test_cartier_foata():
    W = build_system("A:5")
    cf = cartier_foata(W.element("1532"))
    assert cf.layers == ((1, 4), (0, 2))
    assert cf.display(W) == "13·25"
    assert cartier_foata(W.identity()).layers == ()
    B4 = build_system("B:4")
    assert cartier_foata(B4.element("213")).layers == ((0, 2), (1,))
    with pytest.raises(NotFC):
        cartier_foata(build_system("A:4").element("1241"))


def test_display_uses_layers():
    W = build_system("Ctilde:4")
    w = W.element("132413")
    assert w.compact() != "132413"
    assert display_word(w) == "132413"


def test_width_examples():
    W = build_system("Ctilde:4")
    h = heap_of_word(W, W.parse_word("2413524"))
    assert width(h) == 3 == width_bruteforce(h)
    assert width(heap_of_word(W, (0, 2))) == 2
    assert width(heap_of_word(W, (0, 1, 2))) == 1


def test_fc_a_classify():
    W = build_system("Ctilde:4")
    assert fc_a_classify(W.identity()) == 0
    assert fc_a_classify(W.element("1")) == 1
    assert fc_a_classify(W.element("13")) == 2
    assert fc_a_classify(W.element("2413524")) == MORE
    with pytest.raises(NotA2Finite):
        fc_a_classify(build_system("Ctilde:3").element("13"))
    with pytest.raises(NotFC):
        fc_a_classify(build_system("A:4").element("1241"))


def test_dot_is_stable(abcd):
    h = heap_of_word(abcd, abcd.parse_word("abcadb"))
    dot = heap_to_dot(h)
    assert dot == heap_to_dot(heap_of_word(abcd, abcd.parse_word("abcadb")))
    assert dot.count("->") == 6 and 'p3 [label="a"]' in dot


SYSTEMS = ["A:5", "B:4", "H:4", "Ctilde:5", "E:1,2", "F:4"]


def reduced_words(draw, W, max_len=10):
    word = draw(st.lists(st.integers(0, W.size - 1), max_size=max_len))
    return W.element(word).word


@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_heap_criterion_matches_word_criterion(data):
    W = build_system(data.draw(st.sampled_from(SYSTEMS)))
    word = reduced_words(data.draw, W)
    assert is_fc_reduced_word(W, word) == is_fc_word_criterion(W, word)


@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_width_matches_bruteforce(data):
    W = build_system(data.draw(st.sampled_from(SYSTEMS)))
    word = reduced_words(data.draw, W, 9)
    h = heap_of_word(W, word)
    assert width(h) == width_bruteforce(h)


@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_heap_is_commutation_invariant(data):
    W = build_system(data.draw(st.sampled_from(SYSTEMS)))
    word = list(reduced_words(data.draw, W))
    h = heap_of_word(W, word)
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if a != b and W.commute(a, b):
            swapped = word[:k] + [b, a] + word[k + 2 :]
            assert heap_of_word(W, swapped).is_isomorphic(h)


@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_lower_star_heap_test_agrees(data):
    W = build_system(data.draw(st.sampled_from(SYSTEMS)))
    w = W.element(reduced_words(data.draw, W))
    if not is_fc(w):
        return
    for p in noncommuting_pairs(W):
        low = right_lower_star(w, p)
        by_heap = [
            (s, t) for s, t in ((p.s, p.t), (p.t, p.s)) if right_lower_star_heap_test(w, s, t)
        ]
        assert (low is not None) == bool(by_heap)
        if low is not None:
            (s, _t), = by_heap
            assert low == w.rmul(s)


def test_cf_layers_are_antichains():
    W = build_system("B:5")
    for word in itertools.product(range(5), repeat=5):
        w = W.element(word)
        if not is_fc(w):
            continue
        cf = cartier_foata(w)
        for layer in cf.layers:
            assert all(W.commute(a, b) for a, b in itertools.combinations(layer, 2))
        assert W.element(cf.word()) == w
