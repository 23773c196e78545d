"""Left and right a(2)-stubs.

A left stub is an FC element on which no right lower star operation is
defined.  Stubs of a-value 2 are the minimal elements of the right cells in
W_2, so everything in :mod:`a2cells.cells` is organised around them.

>>> from a2cells.coxeter import build_system
>>> W = build_system("B:4")
>>> is_left_stub(W.element("1213")), is_left_stub(W.element("2132"))
(True, False)
>>> [x.compact() for x in generic_stub_elements(W)]
['13', '14', '24', '213', '324', '1213']
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .coxeter import classify
from .elements import GroupElement
from .errors import NotA2Finite, NotFC, ReducibleSystem
from .heaps import CFForm, Heap, cartier_foata, is_fc, width
from .stars import left_upper_star, noncommuting_pairs, right_lower_star
from .tables import closed_form_stub_words

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem

__all__ = [
    "Side",
    "Stub",
    "is_left_stub",
    "is_right_stub",
    "is_left_stub_cf_test",
    "generic_stub_elements",
    "closed_form_stub_elements",
    "enumerate_stubs",
    "closed_form_stubs",
    "require_a2_finite",
]


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Stub:
    element: GroupElement
    side: Side
    cf: CFForm
    class_id_simple: int
    class_id_slide: int

    @property
    def first_layer(self) -> tuple[int, ...]:
        return self.cf.layers[0]

    def compact(self) -> str:
        return self.element.compact()

    def display(self) -> str:
        if self.side is Side.LEFT:
            return self.cf.display(self.element.system)
        # right stubs are peeled from the left, so the first layer prints first
        W = self.element.system
        return "·".join(W.compact_word(layer) for layer in self.cf.layers) or "e"

    def mirror(self) -> Stub:
        """The same stub seen from the other side (the inverse element)."""
        inv = self.element.inverse()
        side = Side.RIGHT if self.side is Side.LEFT else Side.LEFT
        return Stub(inv, side, _cf_for(inv, side), self.class_id_simple, self.class_id_slide)

    def __repr__(self) -> str:
        return f"Stub({self.display()}, {self.side.value})"


def _cf_for(w: GroupElement, side: Side) -> CFForm:
    """Layers peeled from the side the stub is attached to (right for left stubs)."""
    if side is Side.LEFT:
        return cartier_foata(w)
    return CFForm(tuple(tuple(layer) for layer in cartier_foata(w.inverse()).layers))


def _no_right_lower_star(w: GroupElement) -> bool:
    return all(right_lower_star(w, p) is None for p in noncommuting_pairs(w.system))


def is_left_stub(w: GroupElement) -> bool:
    """True iff no right lower star is defined on ``w``.  Raises :class:`NotFC`."""
    if not is_fc(w):
        raise NotFC(f"{w.compact()} is not fully commutative")
    return _no_right_lower_star(w)


def is_right_stub(w: GroupElement) -> bool:
    return is_left_stub(w.inverse())


def is_left_stub_cf_test(w: GroupElement) -> bool:
    """Layer criterion: each letter of the second layer is adjacent to two letters of the first."""
    cf = cartier_foata(w)
    if len(cf) < 2:
        return True
    W = w.system
    first = cf.layers[0]
    for t in cf.layers[1]:
        if sum(1 for s in first if not W.commute(s, t)) < 2:
            return False
    return True


def require_a2_finite(system: CoxeterSystem) -> None:
    try:
        ok = classify(system).a2_finite
    except ReducibleSystem:
        ok = False
    if not ok:
        raise NotA2Finite(f"{system.descriptor} is not a(2)-finite")


def generic_stub_elements(system: CoxeterSystem) -> list[GroupElement]:
    """Stubs of a-value 2, grown from the short stubs by left upper stars.

    Sorted by ``(length, canonical word)``.  Empty when no two generators commute.
    """
    require_a2_finite(system)
    pairs = noncommuting_pairs(system)
    seeds = [GroupElement.from_word(system, st) for st in system.commuting_pairs]
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        x = queue.popleft()
        for p in pairs:
            y = left_upper_star(x, p)
            if y is None or y in seen:
                continue
            seen.add(y)  # rejected images are remembered too
            if is_fc(y) and _no_right_lower_star(y) and width(Heap(system, y.word)) == 2:
                queue.append(y)
    out = [x for x in seen if is_fc(x) and _no_right_lower_star(x) and width(Heap(system, x.word)) == 2]
    return sorted(out, key=lambda x: x.sort_key)


def closed_form_stub_elements(system: CoxeterSystem) -> list[GroupElement]:
    """The explicit per-type list, in emission order.  Raises :class:`NotBuiltinType`."""
    return [system.element([system.index(a) for a in word]) for word in closed_form_stub_words(system)]


def enumerate_stubs(system: CoxeterSystem) -> list[Stub]:
    from .cells import stub_records

    return list(stub_records(system))


def closed_form_stubs(system: CoxeterSystem) -> list[Stub]:
    """Closed-form stubs as :class:`Stub` records; class ids are 0 for words the enumeration lacks."""
    from .cells import a2_structure

    elems = closed_form_stub_elements(system)
    known = a2_structure(system).stub_index
    st = a2_structure(system).stubs
    out = []
    for x in elems:
        if x in known:
            out.append(st[known[x]])
        else:
            out.append(Stub(x, Side.LEFT, cartier_foata(x), 0, 0))
    return out
