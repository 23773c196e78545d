"""Exact group elements via the geometric representation.

Elements are immutable.  Each one holds a kernel state (the matrices of ``w``
and ``w^-1``); equality and hashing use that state, which is a faithful
invariant.  The canonical reduced word (strip the smallest-index left descent
until nothing is left) is computed lazily and used for output and ordering.

>>> from a2cells.coxeter import build_system
>>> W = build_system("A:5")
>>> w = W.element("1532")
>>> sorted(W.labels[s] for s in w.right_descents())
['2', '5']
>>> sorted(W.labels[s] for s in w.left_descents())
['1', '3', '5']
>>> w.inverse() == W.element("2351")
True
>>> build_system("B:4").element("31").compact()
'13'
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import BadWord, SystemMismatch
from .rings import RingScalar

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem

__all__ = [
    "GroupElement",
    "element",
    "reflection_matrix",
    "multiply",
    "inverse",
    "equals",
    "left_descents",
    "right_descents",
    "length",
    "canonical_word",
    "is_reduced",
    "weak_leq_right",
    "weak_leq_left",
    "root_sign_dichotomy",
    "sort_key",
]


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


class GroupElement:
    __slots__ = ("system", "_state", "_kernel", "_word", "_length", "_hash")

    def __init__(self, system: CoxeterSystem, state, length: int | None = None) -> None:
        self.system = system
        self._kernel = system.kernel
        self._state = state
        self._word: tuple[int, ...] | None = None
        self._length = length
        self._hash: int | None = None

    # -- construction ------------------------------------------------------------
    @classmethod
    def identity(cls, system: CoxeterSystem) -> GroupElement:
        e = cls(system, system.kernel.identity(), 0)
        e._word = ()
        return e

    @classmethod
    def from_word(cls, system: CoxeterSystem, word: Sequence[int]) -> GroupElement:
        n = system.size
        for s in word:
            if not (isinstance(s, int) and 0 <= s < n):
                raise BadWord(f"letter {s!r} is not a generator index of {system!r}")
        k = system.kernel
        return cls(system, k.rmul_word(k.identity(), tuple(word)))

    # -- basic data ----------------------------------------------------------------
    @property
    def state(self):
        return self._state

    @property
    def word(self) -> tuple[int, ...]:
        """Canonical reduced word (tuple of generator indices)."""
        if self._word is None:
            w = tuple(self._kernel.reduce_left(self._state))
            self._word = w
            self._length = len(w)
        return self._word

    @property
    def length(self) -> int:
        if self._length is None:
            if self._word is not None:
                self._length = len(self._word)
            else:
                self._length = self._kernel.length(self._state)
        return self._length

    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.length, self.word)

    def compact(self) -> str:
        return self.system.compact_word(self.word)

    def serialize(self) -> str:
        return self.system.format_word(self.word)

    def __repr__(self) -> str:
        return f"<{self.system.descriptor} {self.compact()}>"

    def __str__(self) -> str:
        return self.compact()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._state == other._state and self.system == other.system

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._state)
        return self._hash

    def __lt__(self, other: GroupElement) -> bool:
        return self.sort_key < other.sort_key

    # -- arithmetic ----------------------------------------------------------------
    def _check(self, other: GroupElement) -> None:
        if other.system != self.system:
            raise SystemMismatch(f"{self.system!r} vs {other.system!r}")

    def __mul__(self, other: GroupElement) -> GroupElement:
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check(other)
        if other._length == 0:
            return self
        if self._length == 0:
            return other
        return GroupElement(self.system, self._kernel.rmul_word(self._state, other.word))

    def inverse(self) -> GroupElement:
        out = GroupElement(self.system, self._kernel.inverse(self._state), self._length)
        return out

    def rmul(self, s: int, length: int | None = None) -> GroupElement:
        """``w * s``; pass the known resulting length to skip recomputing it."""
        return GroupElement(self.system, self._kernel.rmul(self._state, s), length)

    def lmul(self, s: int, length: int | None = None) -> GroupElement:
        """``s * w``."""
        return GroupElement(self.system, self._kernel.lmul(self._state, s), length)

    def rmul_word(self, word: Sequence[int]) -> GroupElement:
        return GroupElement(self.system, self._kernel.rmul_word(self._state, tuple(word)))

    def lmul_word(self, word: Sequence[int]) -> GroupElement:
        """``word * w``."""
        return GroupElement(self.system, self._kernel.lmul_word(self._state, tuple(word)))

    # -- descents ----------------------------------------------------------------------
    def right_descent_mask(self) -> int:
        return self._kernel.rdes(self._state)

    def left_descent_mask(self) -> int:
        return self._kernel.ldes(self._state)

    def right_descents(self) -> frozenset[int]:
        return _mask_to_set(self._kernel.rdes(self._state))

    def left_descents(self) -> frozenset[int]:
        return _mask_to_set(self._kernel.ldes(self._state))

    def is_right_descent(self, s: int) -> bool:
        return self._kernel.is_rdes(self._state, s)

    def is_left_descent(self, s: int) -> bool:
        return self._kernel.is_ldes(self._state, s)

    # -- matrices ------------------------------------------------------------------------
    def matrix(self) -> list[list[RingScalar]]:
        ring = self.system.ring
        return [[RingScalar(a, b, ring) for a, b in row] for row in self._kernel.matrix(self._state)]


# ---------------------------------------------------------------------------
# functional API


def element(system: CoxeterSystem, word: Sequence[int] | str = ()) -> GroupElement:
    return system.element(word)


def reflection_matrix(system: CoxeterSystem, s: int) -> GroupElement:
    return GroupElement.from_word(system, (s,))


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    return x * y


def inverse(x: GroupElement) -> GroupElement:
    return x.inverse()


def equals(x: GroupElement, y: GroupElement) -> bool:
    x._check(y)
    return x == y


def left_descents(w: GroupElement) -> frozenset[int]:
    return w.left_descents()


def right_descents(w: GroupElement) -> frozenset[int]:
    return w.right_descents()


def length(w: GroupElement) -> int:
    return w.length


def canonical_word(w: GroupElement) -> tuple[int, ...]:
    return w.word


def is_reduced(system: CoxeterSystem, word: Sequence[int]) -> bool:
    return GroupElement.from_word(system, word).length == len(word)


def weak_leq_right(x: GroupElement, w: GroupElement) -> bool:
    """``x <=_R w``: some reduced word of ``w`` starts with a reduced word of ``x``."""
    x._check(w)
    return x.length + (x.inverse() * w).length == w.length


def weak_leq_left(x: GroupElement, w: GroupElement) -> bool:
    """``x <=_L w``: some reduced word of ``w`` ends with a reduced word of ``x``."""
    x._check(w)
    return x.length + (w * x.inverse()).length == w.length


def root_sign_dichotomy(w: GroupElement) -> bool:
    """True iff every column of the matrix of ``w`` is a positive or negative root vector."""
    for j, col in enumerate(zip(*w.matrix())):
        signs = {x.sign() for x in col} - {0}
        if len(signs) != 1:
            return False
    return True


def sort_key(w: GroupElement) -> tuple[int, tuple[int, ...]]:
    return w.sort_key


def sorted_elements(elements: Iterable[GroupElement]) -> list[GroupElement]:
    return sorted(elements, key=sort_key)
