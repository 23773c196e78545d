import json
import math

import pytest

from a2cells.coxeter import build_system, classify, load_system, system_from_json, system_from_matrix
from a2cells.errors import (
    AsymmetricMatrix,
    BadBond,
    BadDescriptor,
    BadWord,
    InvalidRank,
    ReducibleSystem,
    UnsupportedBond,
)
from a2cells.rings import Ring

NONTRIVIAL = (
    [f"A:{n}" for n in range(3, 9)]
    + [f"B:{n}" for n in range(3, 9)]
    + [f"Ctilde:{m}" for m in range(4, 9)]
    + [f"E:{q},{r}" for q in range(1, 7) for r in range(q, 7) if q + r <= 7]
    + [f"F:{n}" for n in range(4, 9)]
    + [f"H:{n}" for n in range(3, 9)]
)
TRIVIAL = ["A:1", "A:2", "B:2", "H:2"] + [f"I2:{m}" for m in (5, 6, 7, 8, "inf")]
NOT_A2 = ["Ctilde:2", "Ctilde:3"]


def test_b4_matrix():
    W = build_system("B:4")
    assert W.size == 4 and W.ring is Ring.SQRT2
    assert W.bond(0, 1) == 4 and W.bond(1, 2) == 3 and W.bond(2, 3) == 3
    assert W.bond(0, 2) == 2


def test_e11_is_a_star():
    W = build_system("E:1,1")
    assert W.labels == ("-1", "0", "1", "v")
    zero = W.index("0")
    assert sorted(W.labels[j] for j in W.neighbors[zero]) == ["-1", "1", "v"]


def test_a1():
    W = build_system("A:1")
    assert W.matrix == ((1,),)


def test_e_generator_order():
    W = build_system("E:2,3")
    assert W.labels == ("-2", "-1", "0", "1", "2", "3", "v")
    assert W.bond(W.index("v"), W.index("0")) == 3
    assert W.bond(W.index("v"), W.index("3")) == 2


def test_ctilde_heavy_edges():
    W = build_system("Ctilde:4")
    assert W.size == 5
    assert W.bond(0, 1) == 4 and W.bond(3, 4) == 4 and W.bond(1, 2) == 3


@pytest.mark.parametrize("desc", NONTRIVIAL)
def test_classify_nontrivial(desc):
    W = build_system(desc)
    c = classify(W)
    assert c.a2_finite and c.nontrivially_a2_finite
    assert c.family == W.type_tag
    for i in range(W.size):
        assert W.bond(i, i) == 1
        for j in range(W.size):
            assert W.bond(i, j) == W.bond(j, i)


@pytest.mark.parametrize("desc", TRIVIAL)
def test_classify_trivial(desc):
    c = classify(build_system(desc))
    assert c.a2_finite and not c.nontrivially_a2_finite


@pytest.mark.parametrize("desc", NOT_A2)
def test_classify_not_a2(desc):
    assert classify(build_system(desc)).as_dict() == {"a2_finite": False, "nontrivially_a2_finite": False}


def test_complete_triangle():
    W = system_from_matrix("abc", [[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    assert classify(W).as_dict() == {"a2_finite": True, "nontrivially_a2_finite": False}


def test_cycle_not_complete():
    m = [[1, 3, 2, 3], [3, 1, 3, 2], [2, 3, 1, 3], [3, 2, 3, 1]]
    assert not classify(system_from_matrix("abcd", m)).a2_finite


def test_other_trees_are_not_a2_finite():
    # D-like branch with a long smallest arm (E_{2,2} has arms 2,2,1; this has 2,2,2)
    n = 7
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for a, b in [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]:
        m[a][b] = m[b][a] = 3
    assert not classify(system_from_matrix([str(i) for i in range(n)], m)).a2_finite
    # heavy edge second from an end is F
    m = [[1, 3, 2, 2], [3, 1, 4, 2], [2, 4, 1, 3], [2, 2, 3, 1]]
    assert classify(system_from_matrix("abcd", m)).family == "F"
    # a 6-path with the heavy edge dead centre is neither F nor B
    m = [[1 if i == j else 2 for j in range(6)] for i in range(6)]
    for k, b in enumerate([3, 3, 4, 3, 3]):
        m[k][k + 1] = m[k + 1][k] = b
    assert not classify(system_from_matrix("abcdfg", m)).a2_finite


def test_reducible():
    W = system_from_matrix("ab", [[1, 2], [2, 1]])
    with pytest.raises(ReducibleSystem):
        classify(W)


@pytest.mark.parametrize(
    "desc,exc",
    [("A:0", InvalidRank), ("F:3", InvalidRank), ("E:2,1", InvalidRank), ("I2:4", InvalidRank), ("Q:3", BadDescriptor), ("B:x", BadDescriptor)],
)
def test_bad_descriptors(desc, exc):
    with pytest.raises(exc):
        build_system(desc)


def test_matrix_errors():
    with pytest.raises(AsymmetricMatrix):
        system_from_matrix("ab", [[1, 3], [4, 1]])
    with pytest.raises(BadBond):
        system_from_matrix("ab", [[1, -1], [-1, 1]])
    with pytest.raises(BadBond):
        system_from_matrix("ab", [[2, 3], [3, 1]])
    with pytest.raises(UnsupportedBond):
        system_from_matrix("abc", [[1, 4, 2], [4, 1, 5], [2, 5, 1]])


def test_zero_means_infinity():
    W = system_from_matrix("ab", [[1, 0], [0, 1]])
    assert W.bond(0, 1) == math.inf
    assert build_system("I2:inf").bond(0, 1) == math.inf


def test_json_roundtrip(tmp_path):
    obj = {"labels": ["a", "b", "c", "d"], "matrix": [[1, 4, 2, 2], [4, 1, 3, 2], [2, 3, 1, 3], [2, 2, 3, 1]]}
    W = system_from_json(obj)
    assert W.to_json()["labels"] == ["a", "b", "c", "d"]
    p = tmp_path / "custom.json"
    p.write_text(json.dumps(obj))
    assert load_system(str(p)) == W
    assert load_system(json.dumps(obj)) == W
    assert load_system("B:4") == build_system("B:4")


def test_parse_and_format():
    W = build_system("E:1,2")
    w = W.parse_word("-1,0,v")
    assert W.format_word(w) == "-1,0,v"
    assert W.compact_word(w) == "(-1)0v"
    assert W.parse_word("(-1)0v") == w
    assert W.parse_word("") == () and W.parse_word("e") == ()
    assert build_system("B:4").parse_word("1·2·13") == (0, 1, 0, 2)
    with pytest.raises(BadWord):
        W.parse_word("7")
