import pytest

from a2cells.coxeter import build_system, system_from_matrix
from a2cells.errors import NotA2Finite, NotBuiltinType, NotFC
from a2cells.heaps import fc_a_classify, is_fc
from a2cells.stubs import (
    Side,
    closed_form_stub_elements,
    closed_form_stubs,
    enumerate_stubs,
    generic_stub_elements,
    is_left_stub,
    is_left_stub_cf_test,
    is_right_stub,
)
from a2cells.tables import expected_stub_count

from conftest import SWEEP


def test_stub_examples():
    A3 = build_system("A:3")
    assert is_left_stub(A3.element("13"))
    assert not is_left_stub(A3.element("132"))
    assert not is_right_stub(A3.element("213"))
    assert is_right_stub(build_system("B:4").element("132"))
    assert is_left_stub(build_system("B:4").element("1213"))
    with pytest.raises(NotFC):
        is_left_stub(build_system("A:4").element("1241"))


def test_b4_stubs():
    W = build_system("B:4")
    stubs = enumerate_stubs(W)
    assert [x.display() for x in stubs] == ["13", "14", "24", "2·13", "3·24", "1·2·13"]
    assert {x.element for x in stubs} == {W.element(w) for w in ("13", "14", "24", "213", "324", "1213")}
    assert all(x.side is Side.LEFT for x in stubs)
    m = stubs[3].mirror()
    assert m.side is Side.RIGHT and m.element == W.element("132")
    assert m.display() == "13·2"


@pytest.mark.parametrize("desc,count", [("Ctilde:4", 11), ("E:2,2", 20), ("A:4", 5), ("H:3", 5), ("F:4", 9)])
def test_counts(desc, count):
    W = build_system(desc)
    assert len(enumerate_stubs(W)) == count == expected_stub_count(W)
    assert len(closed_form_stubs(W)) == count


@pytest.mark.parametrize("desc", SWEEP)
def test_generic_matches_closed_form(desc):
    W = build_system(desc)
    generic = generic_stub_elements(W)
    assert set(generic) == set(closed_form_stub_elements(W))
    for x in generic:
        assert is_fc(x) and fc_a_classify(x) == 2
        assert is_left_stub(x) and is_left_stub_cf_test(x)
    keys = [x.sort_key for x in generic]
    assert keys == sorted(keys)


@pytest.mark.parametrize("desc", ["A:5", "B:5", "H:4", "E:1,2", "F:4", "Ctilde:4"])
def test_cf_test_agrees_on_a2_elements(desc):
    from a2cells.cells import enumerate_W2

    for w in enumerate_W2(build_system(desc)):
        assert is_left_stub(w) == is_left_stub_cf_test(w)


def test_rejections():
    with pytest.raises(NotA2Finite):
        enumerate_stubs(build_system("Ctilde:3"))
    with pytest.raises(NotA2Finite):
        enumerate_stubs(system_from_matrix("ab", [[1, 2], [2, 1]]))
    with pytest.raises(NotBuiltinType):
        closed_form_stubs(build_system("I2:7"))
    assert enumerate_stubs(build_system("I2:7")) == []
    tri = system_from_matrix("abc", [[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    assert enumerate_stubs(tri) == []
