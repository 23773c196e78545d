"""Golden checks for one system: enumeration against closed forms and structural laws.

Each check returns a :class:`Check`; names describe the statement being
tested so a failure can be traced without reading code.  Systems without
closed-form data (custom matrices, degenerate ranks) get the structural
checks only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from . import tables as T
from .cells import (
    a2_structure,
    a2_triple_of,
    distinguished_involution,
    g,
    glued_product,
    representative_zero_cells,
    two_sided_cells,
)
from .elements import weak_leq_right
from .errors import A2CellsError, NotBuiltinType
from .heaps import fc_a_classify
from .stubs import closed_form_stub_elements

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem
    from .elements import GroupElement

__all__ = ["Check", "run_checks", "b4_checks", "all_passed"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.name}" + (f": {self.detail}" if self.detail else "")


def all_passed(checks: list[Check]) -> bool:
    return all(c.passed for c in checks)


def _elem(W: CoxeterSystem, labels) -> GroupElement:
    return W.element([W.index(a) for a in labels])


def _has_closed_form(W: CoxeterSystem) -> bool:
    try:
        T.family_of(W)
    except NotBuiltinType:
        return False
    return True


def _guard(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except A2CellsError as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, ok, detail)


# ---------------------------------------------------------------------------
# closed-form checks


def _stub_set(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    cf = closed_form_stub_elements(W)
    gen = {x.element for x in st.stubs}
    want = T.expected_stub_count(W)
    if len(cf) != len(set(cf)):
        return False, "closed-form list has repeats"
    if gen != set(cf):
        extra = sorted(w.compact() for w in gen - set(cf))
        missing = sorted(w.compact() for w in set(cf) - gen)
        return False, f"generic-only {extra}, closed-form-only {missing}"
    return len(gen) == want, f"{len(gen)} stubs, expected {want}"


def _class_match(W: CoxeterSystem, simple_only: bool) -> tuple[bool, str]:
    st = a2_structure(W)
    expected = T.expected_simple_classes(W) if simple_only else T.expected_slide_classes(W)
    classes = st.classes(simple_only)
    got = sorted(len(c) for c in classes)
    want = sorted(s for _, s in expected)
    if got != want:
        return False, f"class sizes {got}, expected {want}"
    for rep, size in expected:
        x = st.stubs[st.index_of(_elem(W, rep))]
        cid = x.class_id_simple if simple_only else x.class_id_slide
        if len(classes[cid - 1]) != size:
            return False, f"class of {W.compact_word(x.element.word)} has {len(classes[cid - 1])} stubs, expected {size}"
    desc = ", ".join(f"{W.compact_word([W.index(a) for a in r])}:{s}" for r, s in expected)
    return True, desc


def _rep_indices(W: CoxeterSystem) -> list[int]:
    st = a2_structure(W)
    return [st.index_of(_elem(W, rep)) for rep, _ in T.expected_simple_classes(W)]


def _n_table(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    reps = _rep_indices(W)
    want = T.expected_N(W)
    fam = T.family_of(W)[0]
    for a, i in enumerate(reps):
        for b, j in enumerate(reps):
            got = len(st.zero_cell(i, j))
            if got != want[a][b]:
                return False, f"{fam} N_{a + 1}{b + 1} = {got}, expected {want[a][b]}"
    return True, f"{want}"


def _one_cells(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    reps = _rep_indices(W)
    want = T.expected_one_cell_sizes(W)
    got = [len(st.right_cell_members[i]) for i in reps]
    if got != want:
        return False, f"|R| at representatives {got}, expected {want}"
    # the class sizes and N_ij must reproduce N_i as a row sum
    n = [s for _, s in T.expected_simple_classes(W)]
    Nm = T.expected_N(W)
    sums = [sum(n[j] * Nm[i][j] for j in range(len(n))) for i in range(len(n))]
    return sums == want, f"{got}"


def _two_cells(W: CoxeterSystem) -> tuple[bool, str]:
    got = sorted(two_sided_cells(W).sizes())
    want = sorted(T.expected_two_sided_sizes(W))
    return got == want, f"{len(got)} two-sided cell(s) of sizes {got}, expected {want}"


def _rep_zero_cells(W: CoxeterSystem) -> tuple[bool, str]:
    rows = representative_zero_cells(W)
    bad = [r for r in rows if not r["match"]]
    if bad:
        r = bad[0]
        return False, f"I({r['x']},{r['y']}) = {r['computed']}, expected {r['expected']}"
    return True, "; ".join(f"I({r['x']},{r['y']}) = {{{', '.join(r['computed'])}}}" for r in rows)


# ---------------------------------------------------------------------------
# structural checks


def _partition(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    for w in st.stub_of:
        if fc_a_classify(w) != 2:
            return False, f"{w.compact()} has heap width other than 2"
    return True, f"{len(st.stubs)} right cells, |W_2| = {len(st.stub_of)}"


def _descents_on_cells(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    for x, cell in zip(st.stubs, st.right_cell_members):
        L = x.element.left_descent_mask()
        for w in cell:
            if w.left_descent_mask() != L:
                return False, f"{w.compact()} and {x.compact()} differ in left descents"
    return True, ""


def _weak_order(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    for w, i in st.stub_of.items():
        for j, x in enumerate(st.stubs):
            if weak_leq_right(x.element, w) != (i == j):
                return False, f"{x.compact()} vs {w.compact()}"
    return True, ""


def _n_invariance(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    M = st.n_matrix()
    d = len(M)
    for i in range(d):
        for j in range(d):
            if M[i][j] != M[j][i]:
                return False, f"N({st.stubs[i].compact()},{st.stubs[j].compact()}) is not symmetric"
    seen: dict[tuple[int, int], int] = {}
    for i in range(d):
        for j in range(d):
            key = (st.stubs[i].class_id_simple, st.stubs[j].class_id_simple)
            if seen.setdefault(key, M[i][j]) != M[i][j]:
                return False, f"N not constant on class pair {key}"
    return True, f"{d}x{d} matrix, {len(seen)} class pairs"


def _triples(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    count = 0
    for w in st.stub_of:
        t = a2_triple_of(w)
        c = t.core
        if bin(c.left_descent_mask()).count("1") != 2 or bin(c.right_descent_mask()).count("1") != 2:
            return False, f"core of {w.compact()} is {c.compact()}"
        if t.x.element.right_descent_mask() != c.left_descent_mask():
            return False, f"R(x) != L(core) for {w.compact()}"
        if c.right_descent_mask() != t.yprime.element.left_descent_mask():
            return False, f"R(core) != L(y') for {w.compact()}"
        if g(t) != w:
            return False, f"g(triple({w.compact()})) != {w.compact()}"
        count += 1
    # the other direction: every descent-compatible triple glues into W_2 and comes back
    cores = [w for w in st.stub_of if bin(w.left_descent_mask()).count("1") == 2 == bin(w.right_descent_mask()).count("1")]
    by_first: dict[int, list] = {}
    for x in st.stubs:
        by_first.setdefault(x.element.right_descent_mask(), []).append(x)
    tri = 0
    for c in cores:
        for x in by_first.get(c.left_descent_mask(), []):
            for y in by_first.get(c.right_descent_mask(), []):
                yp = y.mirror()
                w = glued_product(glued_product(x.element, c), yp.element)
                if w not in st.stub_of:
                    return False, f"({x.compact()}, {c.compact()}, {yp.compact()}) glues outside W_2"
                t = a2_triple_of(w)
                if (t.x.element, t.core, t.yprime.element) != (x.element, c, yp.element):
                    return False, f"triple of {w.compact()} does not round-trip"
                tri += 1
    return tri == count, f"{tri} triples, {count} elements"


def _involutions(W: CoxeterSystem) -> tuple[bool, str]:
    st = a2_structure(W)
    for i, x in enumerate(st.stubs):
        d = distinguished_involution(x)
        if d != d.inverse():
            return False, f"x*x^-1 for {x.compact()} is not an involution"
        if d not in st.zero_cell(i, i):
            return False, f"x*x^-1 for {x.compact()} is outside I(x,x)"
    return True, f"{len(st.stubs)} stubs"


# ---------------------------------------------------------------------------
# B4 worked example


def _b4_words(W: CoxeterSystem, words) -> list[str]:
    return [e.compact() for e in sorted((W.element(w) for w in words), key=lambda e: e.sort_key)]


def b4_checks(W: CoxeterSystem) -> list[Check]:
    st = a2_structure(W)
    order = [st.index_of(W.element(w)) for w in T.B4_STUB_ORDER]

    def stubs_() -> tuple[bool, str]:
        got = {x.element for x in st.stubs}
        want = {W.element(w) for w in T.B4_STUB_ORDER}
        return got == want, ", ".join(st.stubs[i].display() for i in order)

    def nmat() -> tuple[bool, str]:
        M = [[len(st.zero_cell(i, j)) for j in order] for i in order]
        return M == [list(r) for r in T.B4_N_MATRIX], f"{M}"

    def members() -> tuple[bool, str]:
        for a, i in enumerate(order):
            for b, j in enumerate(order):
                got = [w.compact() for w in st.zero_cell(i, j)]
                want = _b4_words(W, T.B4_ZERO_CELLS[a][b])
                if got != want:
                    return False, f"I({T.B4_STUB_ORDER[a]},{T.B4_STUB_ORDER[b]}) = {got}, expected {want}"
        return True, "36 entries"

    def sizes() -> tuple[bool, str]:
        got = tuple(len(st.right_cell_members[i]) for i in order)
        return (len(st.stub_of) == 56 and got == T.B4_RIGHT_CELL_SIZES), f"|W_2| = {len(st.stub_of)}, |R| = {list(got)}"

    return [
        _guard("B4 stub list", stubs_),
        _guard("B4 0-cell size matrix", nmat),
        _guard("B4 0-cell members", members),
        _guard("B4 |W_2| and right-cell sizes", sizes),
    ]


# ---------------------------------------------------------------------------


def run_checks(W: CoxeterSystem, weak_order: bool = True) -> list[Check]:
    """All applicable checks for ``W``; a non-a(2)-finite system raises :class:`NotA2Finite`."""
    st = a2_structure(W)
    out: list[Check] = []
    if st.empty:
        return [Check("W_2 is empty (no commuting generators)", True)]
    if _has_closed_form(W):
        out += [
            _guard("stubs: generic enumeration equals the closed-form list", lambda: _stub_set(W)),
            _guard("simple-slide classes (rep:size)", lambda: _class_match(W, True)),
            _guard("slide classes (rep:size)", lambda: _class_match(W, False)),
            _guard("0-cell sizes N_ij at class representatives", lambda: _n_table(W)),
            _guard("1-cell sizes N_i", lambda: _one_cells(W)),
            _guard("2-cell sizes", lambda: _two_cells(W)),
            _guard("representative 0-cells", lambda: _rep_zero_cells(W)),
        ]
    out += [
        _guard("right cells partition W_2 (all of heap width 2)", lambda: _partition(W)),
        _guard("left descents constant on right cells", lambda: _descents_on_cells(W)),
        _guard("N symmetric and constant on simple-slide classes", lambda: _n_invariance(W)),
        _guard("glued triples biject onto W_2", lambda: _triples(W)),
        _guard("x*x^-1 is an involution in I(x,x)", lambda: _involutions(W)),
    ]
    if weak_order:
        out.append(_guard("R_x = {w in W_2 : x <=_R w}", lambda: _weak_order(W)))
    if W.type_tag == "B" and W.size == 4:
        out += b4_checks(W)
    return out

