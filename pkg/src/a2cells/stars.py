"""Coset decompositions and the generalized star operations.

For a pair ``I = {s, t}`` with ``m = m(s,t) >= 3`` write ``w = w^I * w_I`` with
``w_I`` in the dihedral subgroup and ``w^I`` having no right descent in ``I``.
If ``i = l(w_I)``, the right upper star appends one letter to ``w_I`` and is
defined for ``1 <= i <= m-2``; the right lower star deletes its last letter and
is defined for ``2 <= i <= m-1``.  Left operations are the mirror images.

The kernel returns ``i`` and the last letter of ``w_I`` directly from two
matrix columns, so none of these operations rewrites words.

>>> from a2cells.coxeter import system_from_matrix
>>> W = system_from_matrix("abc", [[1, 3, 2], [3, 1, 4], [2, 4, 1]])
>>> w = W.element("abcab")
>>> right_lower_star(w, (0, 1)) == W.element("abca"), right_upper_star(w, (0, 1))
(True, None)
>>> left_upper_star(w, (1, 2)) == W.element("cbabcb")
True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .errors import BondNotThree, NotAnEdge
from .rings import INF

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem
    from .elements import GroupElement

__all__ = [
    "NoncommutingPair",
    "noncommuting_pair",
    "noncommuting_pairs",
    "coset_decompose_left",
    "coset_decompose_right",
    "right_upper_star",
    "right_lower_star",
    "left_upper_star",
    "left_lower_star",
    "simple_right_star",
    "simple_left_star",
    "right_stars",
    "left_stars",
]


@dataclass(frozen=True)
class NoncommutingPair:
    s: int
    t: int
    m: float

    @property
    def kernel_m(self) -> int:
        return 0 if self.m == INF else int(self.m)

    def other(self, e: int) -> int:
        return self.t if e == self.s else self.s


PairLike = Union[NoncommutingPair, "tuple[int, int]"]


def noncommuting_pair(system: CoxeterSystem, s: int, t: int) -> NoncommutingPair:
    if s == t or not (0 <= s < system.size and 0 <= t < system.size):
        raise NotAnEdge(f"({s},{t}) is not a pair of distinct generators")
    m = system.bond(s, t)
    if m < 3:
        raise NotAnEdge(f"{system.labels[s]} and {system.labels[t]} commute")
    return NoncommutingPair(min(s, t), max(s, t), m)


def noncommuting_pairs(system: CoxeterSystem) -> list[NoncommutingPair]:
    return [NoncommutingPair(s, t, m) for s, t, m in system.edges]


def _pair(w: GroupElement, I: PairLike) -> NoncommutingPair:
    if isinstance(I, NoncommutingPair):
        return I
    s, t = I
    return noncommuting_pair(w.system, s, t)


def _plus(w: GroupElement, d: int) -> int | None:
    return None if w._length is None else w._length + d


def _dihedral_word(I: NoncommutingPair, i: int, last: int) -> tuple[int, ...]:
    """Alternating word of length ``i`` ending in ``last`` (any end if ``last`` is -1)."""
    if last < 0:
        last = I.t
    out = []
    cur = last
    for _ in range(i):
        out.append(cur)
        cur = I.other(cur)
    return tuple(reversed(out))


def coset_decompose_left(w: GroupElement, I: PairLike) -> tuple[GroupElement, GroupElement]:
    """``w = outer * inner`` with ``inner`` in ``<s,t>`` and no right descent of ``outer`` in ``I``."""
    from .elements import GroupElement as GE

    p = _pair(w, I)
    i, e = w._kernel.rtail(w.state, p.s, p.t, p.kernel_m)
    word = _dihedral_word(p, i, e)
    inner = GE.from_word(w.system, word)
    outer = w.rmul_word(tuple(reversed(word)))
    return outer, inner


def coset_decompose_right(w: GroupElement, I: PairLike) -> tuple[GroupElement, GroupElement]:
    """``w = inner * outer`` with ``inner`` in ``<s,t>`` and no left descent of ``outer`` in ``I``."""
    from .elements import GroupElement as GE

    p = _pair(w, I)
    i, e = w._kernel.ltail(w.state, p.s, p.t, p.kernel_m)
    word = tuple(reversed(_dihedral_word(p, i, e)))
    inner = GE.from_word(w.system, word)
    outer = w.lmul_word(tuple(reversed(word)))
    return inner, outer


def _upper_ok(i: int, m: float) -> bool:
    return i >= 1 and (m == INF or i <= m - 2)


def _lower_ok(i: int, m: float) -> bool:
    return i >= 2 and (m == INF or i <= m - 1)


def right_upper_star(w: GroupElement, I: PairLike) -> GroupElement | None:
    p = _pair(w, I)
    i, e = w._kernel.rtail(w.state, p.s, p.t, p.kernel_m)
    if not _upper_ok(i, p.m):
        return None
    return w.rmul(p.other(e), _plus(w, 1))


def right_lower_star(w: GroupElement, I: PairLike) -> GroupElement | None:
    p = _pair(w, I)
    i, e = w._kernel.rtail(w.state, p.s, p.t, p.kernel_m)
    if not _lower_ok(i, p.m):
        return None
    return w.rmul(e, _plus(w, -1))


def left_upper_star(w: GroupElement, I: PairLike) -> GroupElement | None:
    p = _pair(w, I)
    i, e = w._kernel.ltail(w.state, p.s, p.t, p.kernel_m)
    if not _upper_ok(i, p.m):
        return None
    return w.lmul(p.other(e), _plus(w, 1))


def left_lower_star(w: GroupElement, I: PairLike) -> GroupElement | None:
    p = _pair(w, I)
    i, e = w._kernel.ltail(w.state, p.s, p.t, p.kernel_m)
    if not _lower_ok(i, p.m):
        return None
    return w.lmul(e, _plus(w, -1))


def _simple(p: NoncommutingPair) -> None:
    if p.m != 3:
        raise BondNotThree(f"simple star needs m=3, got m={p.m}")


def simple_right_star(w: GroupElement, I: PairLike) -> GroupElement | None:
    p = _pair(w, I)
    _simple(p)
    up = right_upper_star(w, p)
    return up if up is not None else right_lower_star(w, p)


def simple_left_star(w: GroupElement, I: PairLike) -> GroupElement | None:
    p = _pair(w, I)
    _simple(p)
    up = left_upper_star(w, p)
    return up if up is not None else left_lower_star(w, p)


def right_stars(w: GroupElement, I: PairLike) -> list[GroupElement]:
    """All defined right star images (upper then lower) w.r.t. one pair."""
    return [x for x in (right_upper_star(w, I), right_lower_star(w, I)) if x is not None]


def left_stars(w: GroupElement, I: PairLike) -> list[GroupElement]:
    return [x for x in (left_upper_star(w, I), left_lower_star(w, I)) if x is not None]
