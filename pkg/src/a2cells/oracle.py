"""Kazhdan-Lusztig cells of a finite Coxeter group, straight from the definitions.

This module knows nothing about stubs or star operations.  It enumerates the
group, builds the Kazhdan-Lusztig basis of the Hecke algebra, reads off the
a-function from structure constants and computes cells as strongly connected
components of the preorders.  It serves as the independent check on
:mod:`a2cells.cells` for small groups.

Conventions (equal parameters, ``A = Z[v, v^-1]``)::

    T_s^2 = 1 + (v - v^-1) T_s,     C_s = T_s + v^-1,
    C_w = sum_y p_{y,w} T_y,        p_{w,w} = 1,  p_{y,w} in v^-1 Z[v^-1] for y != w,
    mu(y, w) = coefficient of v^-1 in p_{y,w}.

Dense arrays hold Laurent polynomials over a fixed exponent window; the C_s
action in the C-basis is a ``scipy.sparse`` matrix plus two shifts.

>>> from a2cells.coxeter import build_system
>>> W = build_system("A:3")
>>> orc = Oracle(W)
>>> len(orc.elements), sorted(orc.a_values().tolist()).count(2)
(24, 4)
>>> s = W.element("1")
>>> structure_constants(s, s, orc)[s]
LaurentPoly('v + v^-1')
"""

from __future__ import annotations

import math
from collections import deque
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Mapping

import networkx as nx
import numpy as np
import scipy.sparse as sp

from .elements import GroupElement
from .errors import GroupInfinite, GroupTooLarge, SystemMismatch
from .rings import INF

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem

__all__ = [
    "DEFAULT_BOUND",
    "SLOW_THRESHOLD",
    "LaurentPoly",
    "HeckeElement",
    "enumerate_group",
    "is_finite",
    "hecke_multiply",
    "T",
    "C_s",
    "Oracle",
    "KLTable",
    "kl_basis_element",
    "structure_constants",
    "a_value",
    "cells_from_definition",
    "dump",
    "compare",
]

DEFAULT_BOUND = 500
SLOW_THRESHOLD = 200  # groups above this size need an explicit opt-in


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Sparse integer Laurent polynomial in ``v``; immutable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        self._c = {int(e): int(a) for e, a in (coeffs or {}).items() if a}

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> LaurentPoly:
        return cls({e: a})

    @classmethod
    def const(cls, a: int) -> LaurentPoly:
        return cls({0: a})

    @classmethod
    def from_window(cls, row: np.ndarray, top: int) -> LaurentPoly:
        """``row[k]`` is the coefficient of ``v^(top - k)``."""
        return cls({top - k: int(a) for k, a in enumerate(row) if a})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def bar(self) -> LaurentPoly:
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _lp(other)
        out = dict(self._c)
        for e, a in other._c.items():
            out[e] = out.get(e, 0) + a
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_lp(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _lp(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _lp(other)
        out: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            a = self._c[e]
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{mono}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _lp(x: LaurentPoly | int) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)


V = LaurentPoly.monomial(1)
VINV = LaurentPoly.monomial(-1)


# ---------------------------------------------------------------------------
# Hecke algebra in the T-basis (sparse, generic)


class HeckeElement:
    """Finite A-linear combination of ``T_w``; immutable."""

    __slots__ = ("system", "_terms")

    def __init__(self, system: CoxeterSystem, terms: Mapping[GroupElement, LaurentPoly] | None = None) -> None:
        self.system = system
        self._terms = {w: p for w, p in (terms or {}).items() if p}

    @property
    def terms(self) -> dict[GroupElement, LaurentPoly]:
        return dict(self._terms)

    def coeff(self, w: GroupElement) -> LaurentPoly:
        return self._terms.get(w, LaurentPoly())

    def _check(self, other: HeckeElement) -> None:
        if other.system != self.system:
            raise SystemMismatch(f"{self.system!r} vs {other.system!r}")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        out = dict(self._terms)
        for w, p in other._terms.items():
            out[w] = out.get(w, LaurentPoly()) + p
        return HeckeElement(self.system, out)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + other.scale(-1)

    def scale(self, c: LaurentPoly | int) -> HeckeElement:
        return HeckeElement(self.system, {w: p * c for w, p in self._terms.items()})

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        return hecke_multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.system == other.system and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), key=lambda kv: kv[0].sort_key)
        return " + ".join(f"({p})T[{w.compact()}]" for w, p in items)


def T(w: GroupElement) -> HeckeElement:
    return HeckeElement(w.system, {w: LaurentPoly.const(1)})


def C_s(system: CoxeterSystem, s: int) -> HeckeElement:
    e = system.identity()
    return HeckeElement(system, {e.lmul(s, 1): LaurentPoly.const(1), e: VINV})


def _ts_left(s: int, h: dict[GroupElement, LaurentPoly]) -> dict[GroupElement, LaurentPoly]:
    out: dict[GroupElement, LaurentPoly] = {}
    q = V - VINV
    for w, p in h.items():
        sw = w.lmul(s)
        out[sw] = out.get(sw, LaurentPoly()) + p
        if w.is_left_descent(s):
            out[w] = out.get(w, LaurentPoly()) + q * p
    return out


def hecke_multiply(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    """Product in the T-basis: ``T_x h = T_{s_1}(... T_{s_k} h)`` for ``x = s_1 ... s_k``."""
    h1._check(h2)
    out: dict[GroupElement, LaurentPoly] = {}
    for x, c in h1._terms.items():
        acc = dict(h2._terms)
        for s in reversed(x.word):
            acc = _ts_left(s, acc)
        for w, p in acc.items():
            out[w] = out.get(w, LaurentPoly()) + c * p
    return HeckeElement(h1.system, out)


# ---------------------------------------------------------------------------
# group enumeration


def is_finite(system: CoxeterSystem) -> bool:
    """Positive definiteness of the cosine form."""
    n = system.size
    B = np.eye(n)
    for i, j, m in system.edges:
        c = 1.0 if m == INF else math.cos(math.pi / m)
        B[i, j] = B[j, i] = -c
    return bool(np.linalg.eigvalsh(B).min() > 1e-9)


def enumerate_group(system: CoxeterSystem, bound: int = DEFAULT_BOUND) -> list[GroupElement]:
    """All elements, breadth first from the identity, sorted by ``(length, word)``."""
    e = system.identity()
    seen = {e}
    frontier = [e]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for w in frontier:
            for s in range(system.size):
                if w.is_right_descent(s):
                    continue
                y = w.rmul(s, depth)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        if not is_finite(system):
                            raise GroupInfinite(f"{system.descriptor} is infinite")
                        raise GroupTooLarge(f"{system.descriptor} has more than {bound} elements")
        frontier = nxt
    return sorted(seen, key=lambda w: w.sort_key)


# ---------------------------------------------------------------------------
# KL polynomials


class KLTable:
    """``p_{y,w}`` for all pairs, stored densely; ``P[w, y, k]`` is the coefficient of ``v^-k``."""

    def __init__(self, elements: list[GroupElement]) -> None:
        self.elements = elements
        self.index = {w: i for i, w in enumerate(elements)}
        system = elements[0].system
        self.N = N = len(elements)
        self.length = np.array([w.length for w in elements], dtype=np.int64)
        self.L = L = int(self.length.max())
        n = system.size
        self.lmul = np.array([[self.index[w.lmul(s)] for w in elements] for s in range(n)], dtype=np.int64)
        self.rmul = np.array([[self.index[w.rmul(s)] for w in elements] for s in range(n)], dtype=np.int64)
        self.inv = np.array([self.index[w.inverse()] for w in elements], dtype=np.int64)
        self.pivot = np.array(
            [min((s for s in range(n) if w.is_left_descent(s)), default=-1) for w in elements], dtype=np.int64
        )
        K = L + 1
        P = np.zeros((N, N, K), dtype=np.int64)
        P[0, 0, 0] = 1
        mu: list[dict[int, int]] = [{} for _ in range(N)]
        for w in range(1, N):
            s = self.pivot[w]
            wp = self.lmul[s, w]
            p = P[wp]
            sl = self.lmul[s]
            down = self.length[sl] < self.length
            new = p[sl].copy()
            if p[down, 0].any() or p[~down, -1].any():
                raise ArithmeticError("KL window overflow")
            new[down, :-1] += p[down, 1:]
            new[~down, 1:] += p[~down, :-1]
            for z, m in mu[wp].items():
                if down[z]:
                    new -= m * P[z]
            P[w] = new
            mu[w] = {int(z): int(new[z, 1]) for z in np.flatnonzero(new[:, 1]) if z != w}
        self.P = P
        self.mu = mu
        self._check_normalisation()

    def _check_normalisation(self) -> None:
        P = self.P
        diag = P[np.arange(self.N), np.arange(self.N)]
        if not (diag[:, 0] == 1).all() or diag[:, 1:].any():
            raise ArithmeticError("p_{w,w} != 1")
        off = P.copy()
        off[np.arange(self.N), np.arange(self.N)] = 0
        if off[:, :, 0].any():
            raise ArithmeticError("p_{y,w} has a constant term for some y != w")

    def p(self, y: GroupElement, w: GroupElement) -> LaurentPoly:
        return LaurentPoly.from_window(self.P[self.index[w], self.index[y]], 0)

    def mu_value(self, y: GroupElement, w: GroupElement) -> int:
        return self.mu[self.index[w]].get(self.index[y], 0)

    @cached_property
    def bruhat(self) -> np.ndarray:
        """``B[w, y]`` true iff ``y <= w``, by the lifting property on a left descent."""
        N = self.N
        B = np.zeros((N, N), dtype=bool)
        B[0, 0] = True
        for w in range(1, N):
            s = self.pivot[w]
            sw = self.lmul[s, w]
            sl = self.lmul[s]
            lower = np.where(self.length[sl] < self.length, sl, np.arange(N))
            B[w] = B[sw][lower]
        return B


# ---------------------------------------------------------------------------
# oracle


class Oracle:
    """KL data for one finite system, filled lazily."""

    def __init__(self, system: CoxeterSystem, bound: int = DEFAULT_BOUND) -> None:
        self.system = system
        self.elements = enumerate_group(system, bound)
        self.kl = KLTable(self.elements)
        self.index = self.kl.index
        self.N = len(self.elements)
        self.E = self.kl.L + 2  # C-basis window: exponents -E..E
        self._h_cache: dict[int, np.ndarray] = {}
        self._a: np.ndarray | None = None

    # -- C_s acting on the left, in the C-basis ------------------------------------------
    @cached_property
    def _cs_ops(self) -> list[tuple[sp.csr_matrix, np.ndarray]]:
        kl = self.kl
        ops = []
        for s in range(self.system.size):
            rows, cols, vals = [], [], []
            sl = kl.lmul[s]
            desc = kl.length[sl] < kl.length
            for w in range(self.N):
                if desc[w]:
                    continue
                rows.append(sl[w]); cols.append(w); vals.append(1)
                for z, m in kl.mu[w].items():
                    if desc[z]:
                        rows.append(z); cols.append(w); vals.append(m)
            A = sp.csr_matrix((vals, (rows, cols)), shape=(self.N, self.N), dtype=np.int64)
            ops.append((A, desc))
        return ops

    def _apply_cs(self, s: int, u: np.ndarray) -> np.ndarray:
        A, desc = self._cs_ops[s]
        out = np.asarray(A @ u)
        d = u[desc]
        if d[:, 0].any() or d[:, -1].any():
            raise ArithmeticError("C-basis window overflow")
        out[desc, 1:] += d[:, :-1]
        out[desc, :-1] += d[:, 1:]
        return out

    def products_with(self, y: int) -> np.ndarray:
        """``H[x, z, k]``: coefficient of ``v^(k - E)`` in ``h_{x,y,z}``."""
        if y in self._h_cache:
            return self._h_cache[y]
        kl = self.kl
        W = 2 * self.E + 1
        H = np.zeros((self.N, self.N, W), dtype=np.int64)
        H[0, y, self.E] = 1
        for x in range(1, self.N):
            s = kl.pivot[x]
            xp = kl.lmul[s, x]
            r = self._apply_cs(s, H[xp])
            sl = kl.lmul[s]
            for z, m in kl.mu[xp].items():
                if kl.length[sl[z]] < kl.length[z]:
                    r -= m * H[z]
            H[x] = r
        if len(self._h_cache) < 4:
            self._h_cache[y] = H
        return H

    def a_values(self) -> np.ndarray:
        if self._a is None:
            a = np.zeros(self.N, dtype=np.int64)
            W = 2 * self.E + 1
            for y in range(self.N):
                H = self.products_with(y)
                nz = H != 0
                has = nz.any(axis=2)
                top = W - 1 - np.argmax(nz[:, :, ::-1], axis=2) - self.E
                deg = np.where(has, top, 0).max(axis=0)
                a = np.maximum(a, deg)
            self._a = a
        return self._a

    # -- cells ------------------------------------------------------------------------------
    def _left_graph(self) -> nx.DiGraph:
        """Edge ``y -> z`` when ``C_z`` occurs in ``C_s C_y`` for some ``s``."""
        kl = self.kl
        G = nx.DiGraph()
        G.add_nodes_from(range(self.N))
        for s, (A, desc) in enumerate(self._cs_ops):
            coo = A.tocoo()
            for z, y in zip(coo.row.tolist(), coo.col.tolist()):
                G.add_edge(y, z)
        return G

    def _mirror(self, G: nx.DiGraph) -> nx.DiGraph:
        inv = self.kl.inv
        H = nx.DiGraph()
        H.add_nodes_from(range(self.N))
        H.add_edges_from((int(inv[a]), int(inv[b])) for a, b in G.edges)
        return H

    @cached_property
    def cells(self) -> dict[str, list[list[int]]]:
        Lg = self._left_graph()
        Rg = self._mirror(Lg)
        both = nx.compose(Lg, Rg)

        def scc(G: nx.DiGraph) -> list[list[int]]:
            return sorted(sorted(c) for c in nx.strongly_connected_components(G))

        return {"left": scc(Lg), "right": scc(Rg), "two_sided": scc(both)}

    def partition(self, kind: str, restrict: Iterable[GroupElement] | None = None) -> set[frozenset]:
        keep = None if restrict is None else {self.index[w] for w in restrict}
        out = set()
        for c in self.cells[kind]:
            if keep is None or keep.intersection(c):
                out.add(frozenset(self.elements[i] for i in c))
        return out


def kl_basis_element(w: GroupElement, oracle: Oracle | None = None) -> HeckeElement:
    orc = oracle or Oracle(w.system)
    i = orc.index[w]
    terms = {}
    for y in range(orc.N):
        p = LaurentPoly.from_window(orc.kl.P[i, y], 0)
        if p:
            terms[orc.elements[y]] = p
    return HeckeElement(w.system, terms)


def structure_constants(x: GroupElement, y: GroupElement, oracle: Oracle | None = None) -> dict[GroupElement, LaurentPoly]:
    """``h_{x,y,z}`` for every ``z`` with a nonzero coefficient."""
    orc = oracle or Oracle(x.system)
    H = orc.products_with(orc.index[y])[orc.index[x]]
    out = {}
    for z in np.flatnonzero(H.any(axis=1)):
        out[orc.elements[z]] = LaurentPoly.from_window(H[z, ::-1], orc.E)
    return out


def a_value(z: GroupElement, oracle: Oracle | None = None) -> int:
    orc = oracle or Oracle(z.system)
    return int(orc.a_values()[orc.index[z]])


def cells_from_definition(system: CoxeterSystem, bound: int = DEFAULT_BOUND, oracle: Oracle | None = None) -> dict[str, list[frozenset]]:
    orc = oracle or Oracle(system, bound)
    return {k: [frozenset(orc.elements[i] for i in c) for c in v] for k, v in orc.cells.items()}


def dump(oracle: Oracle) -> dict:
    return {
        "elements": [w.serialize() for w in oracle.elements],
        "a": [int(a) for a in oracle.a_values()],
        "cells": oracle.cells,
    }


def compare(system: CoxeterSystem, oracle: Oracle | None = None, bound: int = DEFAULT_BOUND) -> list[tuple[str, bool, str]]:
    """Oracle against the stub machinery: ``(name, passed, detail)`` per comparison."""
    from .cells import a2_structure, left_cells, right_cells, two_sided_cells
    from .heaps import Heap, is_fc, width
    from .stars import noncommuting_pairs, right_lower_star

    orc = oracle or Oracle(system, bound)
    a = orc.a_values()
    W2_oracle = {orc.elements[i] for i in np.flatnonzero(a == 2)}
    st = a2_structure(system)
    W2 = set(st.stub_of)
    out = [("a-value 2 set equals W_2", W2_oracle == W2, f"{len(W2_oracle)} oracle, {len(W2)} enumerated")]
    for kind, part in (("right", right_cells), ("left", left_cells), ("two_sided", two_sided_cells)):
        mine = part(system).as_sets()
        theirs = orc.partition(kind, W2)
        out.append((f"{kind} cells in W_2 agree", mine == theirs, f"{len(theirs)} cells"))
    bad = []
    for i, w in enumerate(orc.elements):
        if is_fc(w):
            n = width(Heap(system, w.word))
            if (a[i] == 2) != (n == 2):
                bad.append(w.compact())
    out.append(("a = 2 iff heap width 2 on FC elements", not bad, ", ".join(bad[:5])))
    star_bad = []
    rc = orc.partition("right")
    cell_of = {w: c for c in rc for w in c}
    for w in W2:
        for p in noncommuting_pairs(system):
            y = right_lower_star(w, p)
            if y is not None and y not in cell_of[w]:
                star_bad.append(w.compact())
    out.append(("right lower stars stay in the right cell", not star_bad, ", ".join(star_bad[:5])))
    return out
