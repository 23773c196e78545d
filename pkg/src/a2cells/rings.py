"""Exact quadratic integer rings used by the geometric representation.

A scalar is a pair of integers ``(a, b)`` read in one of three rings:

* ``INT``:   ``a``
* ``SQRT2``: ``a + b*sqrt(2)``
* ``PHI``:   ``a + b*phi`` with ``phi = (1 + sqrt(5)) / 2``

These are exactly the rings generated by ``2*cos(pi/m)`` for the bonds
``m in {2, 3, 4, 5, inf}``, which covers every a(2)-finite family.

>>> x = RingScalar(1, -1, Ring.SQRT2)
>>> ring_sign(x)
-1
>>> ring_sign(RingScalar(3, -2, Ring.SQRT2))
1
>>> RingScalar(0, 1, Ring.PHI) * RingScalar(0, 1, Ring.PHI)
RingScalar(a=1, b=1, ring=<Ring.PHI: 'PHI'>)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "INF",
    "Ring",
    "RingScalar",
    "ring_sign",
    "pair_sign",
    "bond_code",
    "bond_cosine",
    "ring_for_bonds",
]

INF = math.inf


class Ring(enum.Enum):
    INT = "INT"
    SQRT2 = "SQRT2"
    PHI = "PHI"

    @property
    def code(self) -> int:
        return _RING_CODES[self]


_RING_CODES = {Ring.INT: 0, Ring.SQRT2: 1, Ring.PHI: 2}


def pair_sign(a: int, b: int, ring_code: int) -> int:
    """Sign of the real number encoded by ``(a, b)`` in the ring with the given code."""
    if ring_code == 0 or b == 0:
        return (a > 0) - (a < 0)
    if ring_code == 2:
        # a + b*phi = (p + q*sqrt5)/2 with p = 2a+b, q = b
        a, b, rad = 2 * a + b, b, 5
    else:
        rad = 2
    if a >= 0 and b >= 0:
        return 1 if (a or b) else 0
    if a <= 0 and b <= 0:
        return -1
    # mixed signs: compare a^2 with rad*b^2
    lhs, rhs = a * a, rad * b * b
    if lhs == rhs:
        return 0  # unreachable for irrational roots, kept for totality
    bigger_is_a = lhs > rhs
    if a > 0:
        return 1 if bigger_is_a else -1
    return -1 if bigger_is_a else 1


@dataclass(frozen=True)
class RingScalar:
    a: int
    b: int = 0
    ring: Ring = Ring.INT

    def __post_init__(self) -> None:
        if self.ring is Ring.INT and self.b != 0:
            raise ValueError("INT scalars must have b == 0")

    def _coerce(self, other: object) -> RingScalar:
        if isinstance(other, RingScalar):
            if other.ring is not self.ring:
                if other.ring is Ring.INT:
                    return RingScalar(other.a, 0, self.ring)
                if self.ring is Ring.INT and self.b == 0:
                    return other
                raise ValueError(f"cannot mix rings {self.ring.value} and {other.ring.value}")
            return other
        if isinstance(other, int):
            return RingScalar(other, 0, self.ring)
        return NotImplemented  # type: ignore[return-value]

    def _ring_of(self, other: RingScalar) -> Ring:
        return self.ring if self.ring is not Ring.INT else other.ring

    def __add__(self, other: object) -> RingScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingScalar(self.a + o.a, self.b + o.b, self._ring_of(o))

    __radd__ = __add__

    def __neg__(self) -> RingScalar:
        return RingScalar(-self.a, -self.b, self.ring)

    def __sub__(self, other: object) -> RingScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> RingScalar:
        return (-self) + other

    def __mul__(self, other: object) -> RingScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        ring = self._ring_of(o)
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        if ring is Ring.SQRT2:
            return RingScalar(a1 * a2 + 2 * b1 * b2, a1 * b2 + a2 * b1, ring)
        if ring is Ring.PHI:
            # phi^2 = phi + 1
            return RingScalar(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2, ring)
        return RingScalar(a1 * a2, 0, ring)

    __rmul__ = __mul__

    def sign(self) -> int:
        return pair_sign(self.a, self.b, self.ring.code)

    def __float__(self) -> float:
        if self.ring is Ring.SQRT2:
            return self.a + self.b * math.sqrt(2)
        if self.ring is Ring.PHI:
            return self.a + self.b * (1 + math.sqrt(5)) / 2
        return float(self.a)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        unit = "√2" if self.ring is Ring.SQRT2 else "φ"
        if self.a == 0:
            return f"{self.b}{unit}"
        return f"{self.a}{self.b:+d}{unit}"


def ring_sign(x: RingScalar) -> int:
    return x.sign()


# Multiplier codes shared with the kernels: the entry 2*cos(pi/m) of a bond.
#   0: m=2 (zero), 1: m=3 (one), 2: m=4 (sqrt2), 3: m=5 (phi), 4: m=inf (two)
_BOND_CODES = {2: 0, 3: 1, 4: 2, 5: 3}


def bond_code(m: float) -> int | None:
    """Kernel multiplier code of a bond, or None if the bond is not supported."""
    if m == INF:
        return 4
    return _BOND_CODES.get(int(m)) if m == int(m) else None


def bond_cosine(m: float, ring: Ring) -> RingScalar:
    """``2*cos(pi/m)`` as a ring scalar (the negated off-diagonal Gram entry)."""
    code = bond_code(m)
    if code is None:
        raise ValueError(f"bond {m} has no cosine in the supported rings")
    a, b = [(0, 0), (1, 0), (0, 1), (0, 1), (2, 0)][code]
    if b and ring is Ring.INT:
        raise ValueError(f"bond {m} needs a quadratic ring")
    return RingScalar(a, b, ring)


def ring_for_bonds(bonds: set[float]) -> Ring | None:
    """Smallest supported ring containing every bond cosine; None if none exists."""
    has4 = 4 in bonds
    has5 = 5 in bonds
    if has4 and has5:
        return None
    if has4:
        return Ring.SQRT2
    if has5:
        return Ring.PHI
    return Ring.INT
