"""Coxeter systems, the type-descriptor grammar, and the a(2)-finiteness classifier.

Generators are dense indices ``0..n-1``; each carries a display label.  The
built-in families use these labelings:

* ``A:n``, ``B:n``, ``F:n``, ``H:n``: a path ``1 - 2 - ... - n``.  The heavy edge
  sits at ``{1,2}`` (bond 4) in B, at ``{2,3}`` (bond 4) in F and at ``{1,2}``
  (bond 5) in H.
* ``Ctilde:m``: a path ``1 - ... - (m+1)`` with bond-4 edges at both ends.
* ``E:q,r``: a path ``-q - ... - 0 - ... - r`` plus a vertex ``v`` joined to ``0``.
  Generator order is ``[-q, ..., -1, 0, 1, ..., r, v]``.
* ``I2:m``: two generators with bond ``m`` (``inf`` allowed).

>>> W = build_system("B:4")
>>> W.labels, W.bond(0, 1), W.ring.value
(('1', '2', '3', '4'), 4, 'SQRT2')
>>> build_system("E:1,1").labels
('-1', '0', '1', 'v')
>>> classify(build_system("A:3")).nontrivially_a2_finite
True
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, NamedTuple, Sequence

from .errors import (
    AsymmetricMatrix,
    BadBond,
    BadDescriptor,
    BadWord,
    InvalidRank,
    ReducibleSystem,
    UnsupportedBond,
)
from .rings import INF, Ring, bond_code, ring_for_bonds

__all__ = [
    "GeneratorId",
    "CoxeterSystem",
    "Classification",
    "build_system",
    "system_from_matrix",
    "system_from_json",
    "load_system",
    "classify",
    "Word",
]

Word = tuple  # tuple[int, ...] of generator indices


class GeneratorId(NamedTuple):
    index: int
    label: str


@dataclass(frozen=True)
class CoxeterSystem:
    labels: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]
    type_tag: str = "Custom"
    params: tuple = ()
    ring: Ring = Ring.INT
    backend: str = field(default="", compare=True)

    def __post_init__(self) -> None:
        from .kernel import default_backend, kernel_class

        if not self.backend:
            object.__setattr__(self, "backend", default_backend())
        kernel_class(self.backend)  # fail early on an unknown or unbuilt backend

    # -- basic shape -----------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.labels)

    def bond(self, i: int, j: int) -> float:
        return self.matrix[i][j]

    def generator(self, i: int) -> GeneratorId:
        return GeneratorId(i, self.labels[i])

    @property
    def generators(self) -> tuple[GeneratorId, ...]:
        return tuple(self.generator(i) for i in range(self.size))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise BadWord(f"unknown generator label {label!r}") from None

    @cached_property
    def edges(self) -> tuple[tuple[int, int, float], ...]:
        """Diagram edges ``(s, t, m)`` with ``s < t`` and ``m >= 3``."""
        n = self.size
        return tuple(
            (i, j, self.matrix[i][j]) for i in range(n) for j in range(i + 1, n) if self.matrix[i][j] >= 3
        )

    @cached_property
    def commuting_pairs(self) -> tuple[tuple[int, int], ...]:
        n = self.size
        return tuple((i, j) for i in range(n) for j in range(i + 1, n) if self.matrix[i][j] == 2)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        n = self.size
        return tuple(tuple(j for j in range(n) if j != i and self.matrix[i][j] >= 3) for i in range(n))

    def commute(self, i: int, j: int) -> bool:
        return i == j or self.matrix[i][j] == 2

    @property
    def descriptor(self) -> str:
        if self.type_tag == "Custom":
            return "Custom"
        if self.type_tag == "E":
            return f"E:{self.params[0]},{self.params[1]}"
        p = self.params[0]
        return f"{self.type_tag}:{'inf' if p == INF else p}"

    @property
    def arithmetic_supported(self) -> bool:
        return all(bond_code(m) is not None for _, _, m in self.edges)

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.descriptor!r}, n={self.size})"

    # -- kernel and elements ----------------------------------------------
    @cached_property
    def kernel(self):
        from .kernel import make_kernel

        return make_kernel(self)

    def with_backend(self, backend: str) -> CoxeterSystem:
        return CoxeterSystem(self.labels, self.matrix, self.type_tag, self.params, self.ring, backend)

    def identity(self):
        from .elements import GroupElement

        return GroupElement.identity(self)

    def element(self, word: Sequence[int] | str = ()):
        from .elements import GroupElement

        if isinstance(word, str):
            word = self.parse_word(word)
        return GroupElement.from_word(self, word)

    def parse_word(self, text: str) -> tuple[int, ...]:
        """Parse comma-joined labels, or the compact form for single-character labels.

        The compact form accepts parenthesised multi-character labels and ignores
        the layer separator ``·``, so ``"1·2·13"`` and ``"(-1)v"`` both parse.
        """
        text = text.strip()
        if text in ("", "e"):
            return ()
        if "," in text or text in self._label_index:
            return tuple(self.index(tok.strip()) for tok in text.split(","))
        out: list[int] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch in "·. ":
                i += 1
                continue
            if ch == "(":
                j = text.find(")", i)
                if j < 0:
                    raise BadWord(f"unbalanced parenthesis in {text!r}")
                out.append(self.index(text[i + 1 : j].replace("−", "-")))
                i = j + 1
                continue
            out.append(self.index(ch))
            i += 1
        return tuple(out)

    def format_word(self, word: Sequence[int]) -> str:
        """Serialize as comma-joined labels (the interchange format)."""
        return ",".join(self.labels[s] for s in word)

    def compact_word(self, word: Sequence[int]) -> str:
        """Human form: labels run together, multi-character labels in parentheses."""
        if not word:
            return "e"
        return "".join(self.labels[s] if len(self.labels[s]) == 1 else f"({self.labels[s]})" for s in word)

    def to_json(self) -> dict[str, Any]:
        return {
            "labels": list(self.labels),
            "matrix": [[0 if m == INF else int(m) for m in row] for row in self.matrix],
        }


# ---------------------------------------------------------------------------
# construction


def _path_matrix(n: int, heavy: dict[tuple[int, int], float]) -> list[list[float]]:
    m: list[list[float]] = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = 3
    for (i, j), b in heavy.items():
        m[i][j] = m[j][i] = b
    return m


def system_from_matrix(
    labels: Sequence[str],
    matrix: Sequence[Sequence[float]],
    type_tag: str = "Custom",
    params: tuple = (),
    backend: str = "",
) -> CoxeterSystem:
    """Validate a Coxeter matrix and build a system.  ``0`` in the matrix means infinity."""
    labels = tuple(str(x) for x in labels)
    n = len(labels)
    if n < 1:
        raise InvalidRank("a Coxeter system needs at least one generator")
    if len(set(labels)) != n:
        raise BadDescriptor("generator labels must be unique")
    for lab in labels:
        if not lab or "," in lab or any(c.isspace() for c in lab) or lab == "e":
            raise BadDescriptor(f"invalid generator label {lab!r}")
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise BadDescriptor(f"matrix must be {n}x{n}")
    rows: list[list[float]] = []
    for i in range(n):
        row = []
        for j in range(n):
            m = matrix[i][j]
            if m == 0 or m == INF:
                m = INF
            elif isinstance(m, float) and m != int(m):
                raise BadBond(f"non-integer bond {m} at ({i},{j})")
            else:
                m = int(m)
            if m < 1:
                raise BadBond(f"bond {m} at ({i},{j}) is below 1")
            if i == j and m != 1:
                raise BadBond(f"diagonal entry ({i},{i}) must be 1")
            if i != j and m < 2:
                raise BadBond(f"off-diagonal bond at ({i},{j}) must be at least 2")
            row.append(m)
        rows.append(row)
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise AsymmetricMatrix(f"m({i},{j}) != m({j},{i})")
    bonds = {rows[i][j] for i in range(n) for j in range(i + 1, n)}
    ring = ring_for_bonds(bonds)
    if ring is None:
        raise UnsupportedBond("bonds 4 and 5 in one system need a ring beyond SQRT2 and PHI")
    return CoxeterSystem(labels, tuple(tuple(r) for r in rows), type_tag, tuple(params), ring, backend)


_DESCRIPTOR = re.compile(r"^\s*(A|B|Ctilde|E|F|H|I2)\s*:\s*([0-9a-z,\s∞]+)\s*$")

_MIN_RANK = {"A": 1, "B": 2, "Ctilde": 2, "F": 4, "H": 2}


def build_system(descriptor: str, backend: str = "") -> CoxeterSystem:
    """Build a built-in system from a descriptor such as ``"B:4"`` or ``"E:1,2"``."""
    m = _DESCRIPTOR.match(descriptor)
    if not m:
        raise BadDescriptor(f"cannot parse type descriptor {descriptor!r}")
    fam, arg = m.group(1), m.group(2).replace(" ", "")
    if fam == "E":
        try:
            q, r = (int(x) for x in arg.split(","))
        except ValueError:
            raise BadDescriptor(f"E needs two integers, got {arg!r}") from None
        if not r >= q >= 1:
            raise InvalidRank(f"E:{q},{r} needs r >= q >= 1")
        labels = [str(i) for i in range(-q, r + 1)] + ["v"]
        n = len(labels)
        mat = _path_matrix(n, {})
        # the path runs over the first n-1 generators; v hangs off 0
        mat[n - 2][n - 1] = mat[n - 1][n - 2] = 2
        mat[q][n - 1] = mat[n - 1][q] = 3
        return system_from_matrix(labels, mat, "E", (q, r), backend)
    if fam == "I2":
        if arg in ("inf", "∞"):
            mm: float = INF
        else:
            try:
                mm = int(arg)
            except ValueError:
                raise BadDescriptor(f"I2 needs an integer or inf, got {arg!r}") from None
            if mm < 5:
                raise InvalidRank(f"I2:{mm} needs 5 <= m")
        return system_from_matrix(["1", "2"], [[1, mm], [mm, 1]], "I2", (mm,), backend)
    try:
        k = int(arg)
    except ValueError:
        raise BadDescriptor(f"{fam} needs an integer rank, got {arg!r}") from None
    if k < _MIN_RANK[fam]:
        raise InvalidRank(f"{fam}:{k} needs rank >= {_MIN_RANK[fam]}")
    if fam == "A":
        n, heavy = k, {}
    elif fam == "B":
        n, heavy = k, {(0, 1): 4}
    elif fam == "F":
        n, heavy = k, {(1, 2): 4}
    elif fam == "H":
        n, heavy = k, {(0, 1): 5}
    else:  # Ctilde
        n = k + 1
        heavy = {(0, 1): 4, (n - 2, n - 1): 4}
    labels = [str(i) for i in range(1, n + 1)]
    return system_from_matrix(labels, _path_matrix(n, heavy), fam, (k,), backend)


def system_from_json(obj: dict[str, Any] | str, backend: str = "") -> CoxeterSystem:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "labels" not in obj or "matrix" not in obj:
        raise BadDescriptor('custom systems need {"labels": [...], "matrix": [[...]]}')
    return system_from_matrix(obj["labels"], obj["matrix"], "Custom", (), backend)


def load_system(arg: str, backend: str = "") -> CoxeterSystem:
    """Descriptor string, inline JSON object, or path to a JSON file."""
    s = arg.strip()
    if s.startswith("{"):
        return system_from_json(s, backend)
    if s.endswith(".json") or (os.path.exists(s) and not _DESCRIPTOR.match(s)):
        try:
            with open(s, encoding="utf-8") as fh:
                return system_from_json(json.load(fh), backend)
        except OSError as exc:
            raise BadDescriptor(f"cannot read {s}: {exc}") from None
    return build_system(s, backend)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    a2_finite: bool
    nontrivially_a2_finite: bool
    family: str | None = None
    params: tuple = ()

    def as_dict(self) -> dict[str, bool]:
        return {"a2_finite": self.a2_finite, "nontrivially_a2_finite": self.nontrivially_a2_finite}


def _connected(system: CoxeterSystem) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in system.neighbors[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == system.size


def _classify_path(system: CoxeterSystem) -> Classification:
    n = system.size
    nb = system.neighbors
    start = min(i for i in range(n) if len(nb[i]) == 1)
    order = [start]
    while len(order) < n:
        nxt = [j for j in nb[order[-1]] if j not in order]
        order.append(nxt[0])
    bonds = [system.bond(order[k], order[k + 1]) for k in range(n - 1)]
    heavy = [k for k, b in enumerate(bonds) if b != 3]
    no = Classification(False, False)
    if not heavy:
        return Classification(True, n >= 3, "A", (n,))
    ends = {0, n - 2}
    if len(heavy) == 1:
        k = heavy[0]
        b = bonds[k]
        if b == 4 and k in ends:
            return Classification(True, n >= 3, "B", (n,))
        if b == 4 and n >= 4 and k in {1, n - 3}:
            return Classification(True, True, "F", (n,))
        if b == 5 and k in ends:
            return Classification(True, n >= 3, "H", (n,))
        return no
    if len(heavy) == 2 and set(heavy) == ends and all(bonds[k] == 4 for k in heavy):
        ok = n >= 5
        return Classification(ok, ok, "Ctilde" if ok else None, (n - 1,) if ok else ())
    return no


def classify(system: CoxeterSystem) -> Classification:
    """Decide a(2)-finiteness from the Coxeter diagram alone.

    A diagram with a cycle is a(2)-finite exactly when it is complete; an acyclic
    one must be in the families A, B, Ctilde (rank >= 5), E, F, H or I2.
    Raises :class:`ReducibleSystem` on a disconnected diagram.
    """
    n = system.size
    if not _connected(system):
        raise ReducibleSystem("the Coxeter diagram is disconnected")
    if n == 1:
        return Classification(True, False, "A", (1,))
    n_edges = len(system.edges)
    if n_edges >= n:
        complete = n_edges == n * (n - 1) // 2
        return Classification(complete, False, "complete" if complete else None)
    if n == 2:
        m = system.bond(0, 1)
        fam = {3: "A", 4: "B", 5: "H"}.get(m, "I2")  # type: ignore[call-overload]
        return Classification(True, False, fam, (m,) if fam == "I2" else (2,))
    degrees = [len(x) for x in system.neighbors]
    if max(degrees) <= 2:
        return _classify_path(system)
    branch = [i for i in range(n) if degrees[i] >= 3]
    if len(branch) != 1 or degrees[branch[0]] != 3 or any(m != 3 for _, _, m in system.edges):
        return Classification(False, False)
    c = branch[0]
    arms = []
    for j in system.neighbors[c]:
        length, prev, cur = 1, c, j
        while True:
            nxt = [k for k in system.neighbors[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] != 1:
        return Classification(False, False)
    return Classification(True, True, "E", (arms[1], arms[2]))
