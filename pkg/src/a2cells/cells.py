"""Cells of a-value 2: right cells from stubs, 0-cells, slides, triples.

Every element of W_2 lies in the right upper star closure ``R_x`` of exactly
one left stub ``x``; the left cells are the inverse sets, and ``I(x, y)`` is
``R_x`` intersected with the inverse of ``R_y``.  Everything is materialised
once per system by :func:`a2_structure` and cached, so repeated queries are
dictionary lookups.

>>> from a2cells.coxeter import build_system
>>> W = build_system("B:4")
>>> len(enumerate_W2(W)), sorted(len(c) for c in right_cells(W).cells)
(56, [8, 8, 10, 10, 10, 10])
>>> zero_cell(W.element("13"), W.element("13")) == {W.element("13"), W.element("132413")}
True
>>> a2_triple_of(W.element("1324132")).core == W.element("132413")
True
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import TYPE_CHECKING, Iterable, Mapping, Union

import networkx as nx

from .elements import GroupElement
from .errors import (
    NotAnEdge,
    NotAValue2,
    NotDescentCompatible,
    NotRelated,
    NotShortStub,
    ResultNotStub,
    UnknownStubWord,
)
from .heaps import cartier_foata, display_word
from .stars import (
    NoncommutingPair,
    left_lower_star,
    left_stars,
    noncommuting_pair,
    noncommuting_pairs,
    right_upper_star,
)
from .stubs import Side, Stub, generic_stub_elements, require_a2_finite
from .tables import representative_zero_cell_data

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem

__all__ = [
    "CellKind",
    "CellPartition",
    "A2Triple",
    "A2Structure",
    "a2_structure",
    "right_cell_closure",
    "enumerate_W2",
    "stub_records",
    "right_cells",
    "left_cells",
    "two_sided_cells",
    "stub_decomposition",
    "glued_product",
    "a2_triple_of",
    "g",
    "zero_cell",
    "zero_cells",
    "N",
    "n_matrix",
    "slide",
    "slide_classes",
    "transport_zero_cell",
    "distinguished_involution",
    "involutions",
    "representative_zero_cells",
    "cell_size_report",
]

StubLike = Union[Stub, GroupElement]


class CellKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"


@dataclass(frozen=True)
class CellPartition:
    kind: CellKind
    cells: tuple[frozenset, ...]
    index: Mapping[GroupElement, int]

    @classmethod
    def build(cls, kind: CellKind, cells: Iterable[Iterable[GroupElement]]) -> CellPartition:
        frozen = tuple(frozenset(c) for c in cells)
        index: dict[GroupElement, int] = {}
        for k, c in enumerate(frozen):
            for w in c:
                if w in index:
                    raise ValueError(f"{w!r} lies in two cells")
                index[w] = k
        return cls(kind, frozen, MappingProxyType(index))

    def __len__(self) -> int:
        return len(self.cells)

    def cell_of(self, w: GroupElement) -> frozenset:
        return self.cells[self.index[w]]

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def as_sets(self) -> set[frozenset]:
        return set(self.cells)


@dataclass(frozen=True)
class A2Triple:
    x: Stub
    core: GroupElement
    yprime: Stub


def _sorted(elems: Iterable[GroupElement]) -> tuple[GroupElement, ...]:
    return tuple(sorted(elems, key=lambda w: w.sort_key))


def right_cell_closure(x: StubLike) -> frozenset:
    """All elements reachable from ``x`` by right upper star operations."""
    x = _elem(x)
    pairs = noncommuting_pairs(x.system)
    seen = {x}
    queue = deque([x])
    while queue:
        w = queue.popleft()
        for p in pairs:
            y = right_upper_star(w, p)
            if y is not None and y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def _elem(x: StubLike) -> GroupElement:
    return x.element if isinstance(x, Stub) else x


def _short_key(system: CoxeterSystem, x: GroupElement) -> frozenset:
    return frozenset(x.right_descents())


def _slide_graph(system: CoxeterSystem, short: dict[frozenset, int], simple_only: bool) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(short.values())
    for key, i in short.items():
        for t in key:
            (s,) = key - {t}
            for u in system.neighbors[t]:
                if u in key or (simple_only and system.bond(t, u) != 3):
                    continue
                if system.commute(s, u):
                    G.add_edge(i, short[frozenset((s, u))])
    return G


def _classes(system: CoxeterSystem, elems: list[GroupElement], simple_only: bool) -> list[int]:
    """0-based class id per stub; classes ordered by their least member."""
    short = {_short_key(system, x): i for i, x in enumerate(elems) if x.length == 2}
    G = _slide_graph(system, short, simple_only)
    comp_of: dict[int, int] = {}
    for k, comp in enumerate(nx.connected_components(G)):
        for i in comp:
            comp_of[i] = k
    raw = [comp_of[short[_short_key(system, x)]] for x in elems]
    order: dict[int, int] = {}
    for c in raw:  # stubs are sorted, so first occurrence is the representative
        order.setdefault(c, len(order))
    return [order[c] for c in raw]


@lru_cache(maxsize=64)
def stub_records(system: CoxeterSystem) -> tuple[Stub, ...]:
    """Left stubs with class ids, without building any cell."""
    require_a2_finite(system)
    elems = generic_stub_elements(system)
    simple = _classes(system, elems, True) if elems else []
    slide_ = _classes(system, elems, False) if elems else []
    return tuple(Stub(x, Side.LEFT, cartier_foata(x), simple[i] + 1, slide_[i] + 1) for i, x in enumerate(elems))


class A2Structure:
    """All a-value-2 data for one system.  Immutable once built."""

    def __init__(self, system: CoxeterSystem) -> None:
        self.stubs: tuple[Stub, ...] = stub_records(system)
        self.system = system
        self.pairs = tuple(noncommuting_pairs(system))
        elems = [x.element for x in self.stubs]
        self.stub_index: Mapping[GroupElement, int] = MappingProxyType({x: i for i, x in enumerate(elems)})
        cells = [_sorted(right_cell_closure(x)) for x in elems]
        self.right_cell_members: tuple[tuple[GroupElement, ...], ...] = tuple(cells)
        stub_of: dict[GroupElement, int] = {}
        for i, c in enumerate(cells):
            for w in c:
                if w in stub_of:
                    raise AssertionError(f"right cells of {elems[stub_of[w]]!r} and {elems[i]!r} overlap")
                stub_of[w] = i
        self.stub_of: Mapping[GroupElement, int] = MappingProxyType(stub_of)
        self._zero: dict[tuple[int, int], tuple[GroupElement, ...]] | None = None

    @property
    def empty(self) -> bool:
        return not self.stubs

    @property
    def elements(self) -> tuple[GroupElement, ...]:
        return _sorted(self.stub_of)

    def classes(self, simple_only: bool) -> list[list[Stub]]:
        out: dict[int, list[Stub]] = {}
        for x in self.stubs:
            out.setdefault(x.class_id_simple if simple_only else x.class_id_slide, []).append(x)
        return [out[k] for k in sorted(out)]

    def index_of(self, x: StubLike) -> int:
        w = _elem(x)
        try:
            return self.stub_index[w]
        except KeyError:
            raise UnknownStubWord(f"{w.compact()} is not a left stub of a-value 2") from None

    @property
    def zero_cells(self) -> Mapping[tuple[int, int], tuple[GroupElement, ...]]:
        if self._zero is None:
            buckets: dict[tuple[int, int], list[GroupElement]] = {}
            for w, i in self.stub_of.items():
                j = self.stub_of[w.inverse()]
                buckets.setdefault((i, j), []).append(w)
            self._zero = {k: _sorted(v) for k, v in buckets.items()}
        return MappingProxyType(self._zero)

    def zero_cell(self, i: int, j: int) -> tuple[GroupElement, ...]:
        return self.zero_cells.get((i, j), ())

    def n_matrix(self) -> list[list[int]]:
        d = len(self.stubs)
        return [[len(self.zero_cell(i, j)) for j in range(d)] for i in range(d)]


@lru_cache(maxsize=64)
def a2_structure(system: CoxeterSystem) -> A2Structure:
    return A2Structure(system)


# ---------------------------------------------------------------------------
# partitions


def enumerate_W2(system: CoxeterSystem) -> list[GroupElement]:
    return list(a2_structure(system).elements)


def right_cells(system: CoxeterSystem) -> CellPartition:
    return CellPartition.build(CellKind.RIGHT, a2_structure(system).right_cell_members)


def left_cells(system: CoxeterSystem) -> CellPartition:
    st = a2_structure(system)
    return CellPartition.build(CellKind.LEFT, ([w.inverse() for w in c] for c in st.right_cell_members))


def two_sided_cells(system: CoxeterSystem) -> CellPartition:
    st = a2_structure(system)
    groups: dict[int, list[GroupElement]] = {}
    for x, cell in zip(st.stubs, st.right_cell_members):
        groups.setdefault(x.class_id_slide, []).extend(cell)
    return CellPartition.build(CellKind.TWO_SIDED, (groups[k] for k in sorted(groups)))


# ---------------------------------------------------------------------------
# decompositions and glued products


def stub_decomposition(w: GroupElement) -> tuple[Stub, GroupElement]:
    """``w = x * z`` with ``x`` the unique left stub below ``w`` in right weak order."""
    st = a2_structure(w.system)
    i = st.stub_of.get(w)
    if i is None:
        raise NotAValue2(f"{w.compact()} does not have a-value 2")
    x = st.stubs[i]
    return x, x.element.inverse() * w


def _descent_word(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def glued_product(w: GroupElement, w2: GroupElement) -> GroupElement:
    """``w * p * w2`` where ``p`` is the product of the two shared descents."""
    r = w.right_descent_mask()
    if r != w2.left_descent_mask() or bin(r).count("1") != 2:
        raise NotDescentCompatible(f"R({w.compact()}) and L({w2.compact()}) differ or are not of size 2")
    return w.rmul_word(_descent_word(r)) * w2


def a2_triple_of(w: GroupElement) -> A2Triple:
    st = a2_structure(w.system)
    i = st.stub_of.get(w)
    if i is None:
        raise NotAValue2(f"{w.compact()} does not have a-value 2")
    j = st.stub_of[w.inverse()]
    x = st.stubs[i]
    y = st.stubs[j]
    px = _descent_word(x.element.right_descent_mask())
    py = _descent_word(y.element.right_descent_mask())
    core = (x.element.inverse() * w * y.element).lmul_word(px).rmul_word(py)
    return A2Triple(x, core, y.mirror())


def g(triple: A2Triple) -> GroupElement:
    return glued_product(glued_product(triple.x.element, triple.core), triple.yprime.element)


# ---------------------------------------------------------------------------
# 0-cells


def zero_cell(x: StubLike, y: StubLike) -> frozenset:
    """``I(x, y)``: elements of ``R_x`` whose inverse lies in ``R_y``."""
    st = a2_structure(_elem(x).system)
    return frozenset(st.zero_cell(st.index_of(x), st.index_of(y)))


def zero_cells(system: CoxeterSystem) -> dict[tuple[Stub, Stub], tuple[GroupElement, ...]]:
    st = a2_structure(system)
    return {(st.stubs[i], st.stubs[j]): c for (i, j), c in sorted(st.zero_cells.items())}


def N(x: StubLike, y: StubLike) -> int:
    return len(zero_cell(x, y))


def n_matrix(system: CoxeterSystem) -> list[list[int]]:
    """``N(x, y)`` over all stubs in enumeration order."""
    return a2_structure(system).n_matrix()


def involutions(cell: Iterable[GroupElement]) -> list[GroupElement]:
    return [w for w in _sorted(cell) if w == w.inverse()]


def distinguished_involution(x: StubLike) -> GroupElement:
    w = _elem(x)
    return glued_product(w, w.inverse())


# ---------------------------------------------------------------------------
# slides


def _edge(system: CoxeterSystem, edge) -> NoncommutingPair:
    if isinstance(edge, NoncommutingPair):
        return edge
    a, b = edge
    return noncommuting_pair(system, a, b)


def slide(x: StubLike, edge) -> StubLike:
    """Move the short stub ``st`` to ``su`` along the diagram edge ``{t, u}``.

    Implemented as a right upper star followed by a left lower star.  Returns
    a :class:`Stub` when given one, otherwise a group element.
    """
    w = _elem(x)
    W = w.system
    if w.length != 2 or len(w.right_descents()) != 2:
        raise NotShortStub(f"{w.compact()} is not a short stub")
    p = _edge(W, edge)
    letters = set(w.word)
    common = letters & {p.s, p.t}
    if len(common) != 1:
        raise NotAnEdge(f"edge {{{W.labels[p.s]},{W.labels[p.t]}}} must meet {w.compact()} in one letter")
    (t,) = common
    u = p.other(t)
    (s,) = letters - {t}
    if not W.commute(s, u):
        raise ResultNotStub(f"{W.labels[s]}{W.labels[u]} is not a short stub")
    y = left_lower_star(right_upper_star(w, p), p)
    if isinstance(x, Stub):
        st = a2_structure(W)
        return st.stubs[st.index_of(y)]
    return y


def slide_classes(system: CoxeterSystem, simple_only: bool = False) -> list[list[Stub]]:
    """Slide (or simple-slide) classes, each sorted, ordered by least member."""
    return a2_structure(system).classes(simple_only)


def transport_zero_cell(cell: Iterable[GroupElement], from_x: StubLike, to_x: StubLike, route: str = "auto") -> frozenset:
    """Carry ``I(from_x, y)`` to ``I(to_x, y)``.

    ``multiply``: left multiplication by ``to_x * from_x^-1`` (stubs sharing a first layer).
    ``stars``: all left star images along the edge relating two first layers.
    """
    a = _elem(from_x)
    b = _elem(to_x)
    cell = frozenset(cell)
    if a == b:
        return cell
    W = a.system
    la, lb = a.right_descents(), b.right_descents()
    if route in ("auto", "multiply") and la == lb:
        u = b * a.inverse()
        return frozenset(u * w for w in cell)
    if route in ("auto", "stars") and len(la) == len(lb) == 2 and len(la & lb) == 1:
        (t,) = la - lb
        (u,) = lb - la
        if W.bond(t, u) >= 3:
            p = noncommuting_pair(W, t, u)
            out = set()
            for w in cell:
                out.update(left_stars(w, p))
            return frozenset(out)
    raise NotRelated(f"no {route} route from {a.compact()} to {b.compact()}")


# ---------------------------------------------------------------------------
# reports


def representative_zero_cells(system: CoxeterSystem) -> list[dict]:
    """Direct ``I(x, y)`` against the closed-form representative sets."""
    out = []
    for item in representative_zero_cell_data(system):
        x = system.element([system.index(a) for a in item.x])
        y = system.element([system.index(a) for a in item.y])
        expected = {system.element([system.index(a) for a in m]) for m in item.members}
        got = zero_cell(x, y)
        out.append(
            {
                "x": display_word(x),
                "y": display_word(y),
                "expected": [display_word(w) for w in _sorted(expected)],
                "computed": [display_word(w) for w in _sorted(got)],
                "match": got == expected,
            }
        )
    return out


def cell_size_report(system: CoxeterSystem) -> dict:
    """Enumerated sizes keyed by class representative (simple-slide classes)."""
    st = a2_structure(system)
    classes = st.classes(simple_only=True)
    reps = [c[0] for c in classes]
    Nrep = [[len(st.zero_cell(st.index_of(a), st.index_of(b))) for b in reps] for a in reps]
    two = two_sided_cells(system)
    return {
        "right_cell_sizes": {x.compact(): len(c) for x, c in zip(st.stubs, st.right_cell_members)},
        "class_reps": [display_word(x.element) for x in reps],
        "n": [len(c) for c in classes],
        "N": Nrep,
        "one_cell_sizes": [len(st.right_cell_members[st.index_of(x)]) for x in reps],
        "two_sided_sizes": two.sizes(),
        "total": len(st.stub_of),
    }
