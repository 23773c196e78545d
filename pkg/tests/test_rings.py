import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a2cells.rings import Ring, RingScalar, bond_code, bond_cosine, pair_sign, ring_for_bonds, ring_sign

ints = st.integers(min_value=-10**6, max_value=10**6)
rings = st.sampled_from(list(Ring))


def scalars(ring=rings):
    return st.builds(lambda a, b, r: RingScalar(a, 0 if r is Ring.INT else b, r), ints, ints, ring)


@pytest.mark.parametrize(
    "a,b,ring,expected",
    [(1, -1, Ring.SQRT2, -1), (3, -2, Ring.SQRT2, 1), (0, 0, Ring.PHI, 0), (0, 0, Ring.INT, 0), (-2, 0, Ring.INT, -1)],
)
def test_sign_examples(a, b, ring, expected):
    assert ring_sign(RingScalar(a, b, ring)) == expected


def test_phi_edge_cases():
    # 1 - phi + ... : phi^2 = phi + 1 exactly
    phi = RingScalar(0, 1, Ring.PHI)
    assert phi * phi - phi - RingScalar(1, 0, Ring.PHI) == RingScalar(0, 0, Ring.PHI)
    assert pair_sign(-1, 1, Ring.PHI.code) == 1  # phi - 1 > 0
    assert pair_sign(2, -1, Ring.PHI.code) == 1  # 2 - phi > 0
    assert pair_sign(1, -1, Ring.PHI.code) == -1


@given(scalars(), scalars())
def test_sign_matches_float(x, y):
    if x.ring is not y.ring:
        return
    z = x - y
    f = float(z)
    if abs(f) > 1e-6:
        assert ring_sign(z) == (1 if f > 0 else -1)


@given(st.data())
def test_ring_axioms(data):
    r = data.draw(rings)
    x, y, z = (data.draw(scalars(st.just(r))) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x


@given(st.data())
def test_sign_multiplicative(data):
    r = data.draw(rings)
    x, y = data.draw(scalars(st.just(r))), data.draw(scalars(st.just(r)))
    assert ring_sign(x * x) >= 0
    assert ring_sign(x * y) == ring_sign(x) * ring_sign(y)


def test_bond_codes_and_rings():
    assert [bond_code(m) for m in (2, 3, 4, 5, math.inf)] == [0, 1, 2, 3, 4]
    assert bond_code(6) is None
    assert ring_for_bonds([3, 4]) is Ring.SQRT2
    assert ring_for_bonds([3, 5]) is Ring.PHI
    assert ring_for_bonds([3, math.inf]) is Ring.INT
    assert ring_for_bonds([4, 5]) is None
    assert math.isclose(float(bond_cosine(5, Ring.PHI)), 2 * math.cos(math.pi / 5))
    assert math.isclose(float(bond_cosine(4, Ring.SQRT2)), 2 * math.cos(math.pi / 4))
