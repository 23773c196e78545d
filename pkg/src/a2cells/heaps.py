"""Heaps of words, fully commutative (FC) elements, Cartier-Foata form and width.

The heap of a word ``s_1 ... s_q`` is the poset on positions ``0..q-1`` generated
by ``i < j`` whenever the letters at ``i`` and ``j`` do not commute (equal letters
never commute).  Later letters sit higher, so the maximal elements carry the
right descents of an FC element.

Relations are stored as bitmasks: ``reach[i]`` is the set of positions ``j``
with ``i <= j`` in the heap order.

>>> from a2cells.coxeter import build_system
>>> W = build_system("A:5")
>>> h = heap_of_word(W, W.parse_word("1532"))
>>> sorted(h.label(i) for i in h.minimal())
['1', '3', '5']
>>> cartier_foata(W.element("1532")).display(W)
'13·25'
>>> width(heap_of_word(W, W.parse_word("13")))
2
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

from .coxeter import classify
from .errors import NotA2Finite, NotFC, NotReduced, ReducibleSystem
from .rings import INF

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem
    from .elements import GroupElement

__all__ = [
    "Heap",
    "heap_of_word",
    "is_fc_reduced_word",
    "is_fc_word_criterion",
    "is_fc",
    "CFForm",
    "cartier_foata",
    "width",
    "width_bruteforce",
    "MORE",
    "fc_a_classify",
    "heap_to_dot",
    "heap_to_tikz",
    "right_lower_star_heap_test",
    "layer_word",
    "display_word",
]

MORE = "MORE"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Heap:
    """Labeled poset of a word; immutable after construction."""

    def __init__(self, system: CoxeterSystem, word: Sequence[int]) -> None:
        self.system = system
        self.word = tuple(word)
        q = len(self.word)
        self.size = q
        reach = [0] * q
        for i in range(q - 1, -1, -1):
            r = 1 << i
            si = self.word[i]
            for j in range(i + 1, q):
                if not system.commute(si, self.word[j]) or si == self.word[j]:
                    r |= reach[j]
            reach[i] = r
        self.reach = tuple(reach)
        # covers: minimal elements of reach[i] - {i}
        up_cov = []
        for i in range(q):
            above = reach[i] & ~(1 << i)
            strict = 0
            for k in _bits(above):
                strict |= reach[k] & ~(1 << k)
            up_cov.append(above & ~strict)
        self.up_covers = tuple(up_cov)
        down = [0] * q
        for i in range(q):
            for j in _bits(up_cov[i]):
                down[j] |= 1 << i
        self.down_covers = tuple(down)

    def label(self, i: int) -> str:
        return self.system.labels[self.word[i]]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.reach[i] >> j & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(i, j)`` with ``i`` covered by ``j``, sorted."""
        return sorted((i, j) for i in range(self.size) for j in _bits(self.up_covers[i]))

    def minimal(self) -> list[int]:
        return [i for i in range(self.size) if not self.down_covers[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(self.size) if not self.up_covers[i]]

    @cached_property
    def levels(self) -> tuple[int, ...]:
        """Lattice-embedding height: 0 for minimal elements, else 1 + max level below."""
        lv = [0] * self.size
        for j in range(self.size):
            below = self.down_covers[j]
            lv[j] = 1 + max(lv[i] for i in _bits(below)) if below else 0
        return tuple(lv)

    def ideal(self, mask: int) -> int:
        """Positions lying below some element of ``mask``."""
        out = 0
        for i in range(self.size):
            if self.reach[i] & mask:
                out |= 1 << i
        return out

    def filter(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= self.reach[i]
        return out

    def is_antichain(self, mask: int) -> bool:
        for i in _bits(mask):
            if self.reach[i] & mask & ~(1 << i):
                return False
        return True

    def is_isomorphic(self, other: Heap) -> bool:
        """Labeled-poset isomorphism (brute force; meant for small heaps in tests)."""
        if self.size != other.size or sorted(self.word) != sorted(other.word):
            return False
        cover_a = set(self.covers())
        cover_b = set(other.covers())
        by_label: dict[int, list[int]] = {}
        for j, s in enumerate(other.word):
            by_label.setdefault(s, []).append(j)
        # positions with the same label form a chain in both heaps, so the
        # only label-preserving bijection that can work is order-preserving.
        counters: dict[int, int] = {}
        perm = []
        for s in self.word:
            k = counters.get(s, 0)
            perm.append(by_label[s][k])
            counters[s] = k + 1
        return {(perm[i], perm[j]) for i, j in cover_a} == cover_b


def heap_of_word(system: CoxeterSystem, word: Sequence[int]) -> Heap:
    return Heap(system, word)


def _heap_is_fc(h: Heap) -> bool:
    sysm = h.system
    w = h.word
    # (1) no covering relation between equal labels
    for i, j in h.covers():
        if w[i] == w[j]:
            return False
    # (2) no convex alternating chain s,t,s,... of length m(s,t)
    for s, t, m in sysm.edges:
        if m == INF:
            continue
        m = int(m)
        pos = [i for i, x in enumerate(w) if x == s or x == t]
        for start in range(len(pos) - m + 1):
            chunk = pos[start : start + m]
            if any(w[chunk[k]] == w[chunk[k + 1]] for k in range(m - 1)):
                continue
            a, b = chunk[0], chunk[-1]
            interval = h.reach[a] & h.ideal(1 << b)
            if bin(interval).count("1") == m:
                return False
    return True


def is_fc_reduced_word(system: CoxeterSystem, word: Sequence[int]) -> bool:
    """Heap criterion for full commutativity of a reduced word.

    Raises :class:`NotReduced` if the word is not reduced.
    """
    from .elements import GroupElement

    if GroupElement.from_word(system, word).length != len(word):
        raise NotReduced(f"{system.compact_word(word)} is not reduced")
    return _heap_is_fc(Heap(system, word))


def is_fc_word_criterion(system: CoxeterSystem, word: Sequence[int]) -> bool:
    """Word criterion: no word in the commutation class contains a long braid.

    Explores the commutation class by breadth-first search; exponential in the
    worst case and kept as a differential-testing alternate.
    """
    from .elements import GroupElement

    word = tuple(word)
    if GroupElement.from_word(system, word).length != len(word):
        raise NotReduced(f"{system.compact_word(word)} is not reduced")
    braids = []
    for s, t, m in system.edges:
        if m != INF:
            m = int(m)
            braids.append(tuple((s, t)[k % 2] for k in range(m)))
            braids.append(tuple((t, s)[k % 2] for k in range(m)))
    seen = {word}
    queue = deque([word])
    while queue:
        u = queue.popleft()
        for br in braids:
            L = len(br)
            for k in range(len(u) - L + 1):
                if u[k : k + L] == br:
                    return False
        for k in range(len(u) - 1):
            a, b = u[k], u[k + 1]
            if a != b and system.commute(a, b):
                v = u[:k] + (b, a) + u[k + 2 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return True


def is_fc(w: GroupElement) -> bool:
    return _heap_is_fc(Heap(w.system, w.word))


@dataclass(frozen=True)
class CFForm:
    """Cartier-Foata layers, first layer (the right descents) first."""

    layers: tuple[tuple[int, ...], ...]

    def word(self) -> tuple[int, ...]:
        """Reduced word ``w_p ... w_2 w_1``."""
        return tuple(s for layer in reversed(self.layers) for s in layer)

    def display(self, system: CoxeterSystem) -> str:
        if not self.layers:
            return "e"
        return "·".join(system.compact_word(layer) for layer in reversed(self.layers))

    def __len__(self) -> int:
        return len(self.layers)


def cartier_foata(w: GroupElement) -> CFForm:
    """Peel off the right descent set repeatedly.  Raises :class:`NotFC`."""
    if not is_fc(w):
        raise NotFC(f"{w.compact()} is not fully commutative")
    layers = []
    x = w
    while x.length:
        d = tuple(sorted(x.right_descents()))
        layers.append(d)
        x = x.rmul_word(d)
    return CFForm(tuple(layers))


def layer_word(w: GroupElement) -> tuple[int, ...]:
    """Cartier-Foata word (layers concatenated) for FC elements, canonical word otherwise."""
    return cartier_foata(w).word() if is_fc(w) else w.word


def display_word(w: GroupElement) -> str:
    return w.system.compact_word(layer_word(w))


def _max_matching(adj: list[int], q: int) -> int:
    match_right = [-1] * q

    def augment(u: int, seen: list[bool]) -> bool:
        for v in _bits(adj[u]):
            if not seen[v]:
                seen[v] = True
                if match_right[v] < 0 or augment(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    return sum(augment(u, [False] * q) for u in range(q))


def width(h: Heap) -> int:
    """Maximum antichain size, by Dilworth: ``q - (maximum matching on strict order)``."""
    q = h.size
    if q == 0:
        return 0
    adj = [h.reach[i] & ~(1 << i) for i in range(q)]
    return q - _max_matching(adj, q)


def width_bruteforce(h: Heap) -> int:
    """Exhaustive antichain search; exponential, used as a test oracle."""
    best = 0
    for k in range(1, h.size + 1):
        found = False
        for combo in itertools.combinations(range(h.size), k):
            mask = sum(1 << i for i in combo)
            if h.is_antichain(mask):
                found = True
                break
        if not found:
            break
        best = k
    return best


def fc_a_classify(w: GroupElement) -> int | str:
    """a-value of an FC element from its heap width: 0, 1, 2 or ``MORE``.

    Width 2 only certifies a-value 2 in a(2)-finite systems, so other systems
    raise :class:`NotA2Finite` rather than guess.
    """
    if not is_fc(w):
        raise NotFC(f"{w.compact()} is not fully commutative")
    if w.length == 0:
        return 0
    n = width(Heap(w.system, w.word))
    if n == 1:
        return 1
    if n >= 3:
        return MORE
    try:
        ok = classify(w.system).a2_finite
    except ReducibleSystem:
        ok = False
    if not ok:
        raise NotA2Finite(f"{w.system!r} is not a(2)-finite; width 2 does not determine the a-value")
    return 2


def right_lower_star_heap_test(w: GroupElement, s: int, t: int) -> bool:
    """Heap-side test that the right lower star w.r.t. ``{s,t}`` exists and removes ``s``.

    Needs: a maximal element ``i`` labeled ``s`` covering some ``j`` labeled ``t``
    such that ``i`` is the only element covering ``j``.
    """
    h = Heap(w.system, w.word)
    for i in h.maximal():
        if h.word[i] != s:
            continue
        for j in _bits(h.down_covers[i]):
            if h.word[j] == t and h.up_covers[j] == 1 << i:
                return True
    return False


def heap_to_dot(h: Heap, name: str = "heap") -> str:
    """Hasse diagram in DOT; vertices ranked by lattice level, ids by position."""
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", '  node [shape=circle, fontsize=12];']
    for i in range(h.size):
        lines.append(f'  p{i} [label="{h.label(i)}"];')
    by_level: dict[int, list[int]] = {}
    for i, lv in enumerate(h.levels):
        by_level.setdefault(lv, []).append(i)
    for lv in sorted(by_level):
        members = " ".join(f"p{i};" for i in by_level[lv])
        lines.append(f"  {{ rank=same; {members} }}")
    for i, j in h.covers():
        lines.append(f"  p{i} -> p{j} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def heap_to_tikz(h: Heap) -> str:
    """TikZ picture of the Hasse diagram: x by generator index, y by lattice level."""
    lines = ["\\begin{tikzpicture}[scale=0.8]"]
    for i in range(h.size):
        lines.append(f"  \\node (p{i}) at ({h.word[i]},{h.levels[i]}) {{$\\mathtt{{{h.label(i)}}}$}};")
    for i, j in h.covers():
        lines.append(f"  \\draw (p{i}) -- (p{j});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
