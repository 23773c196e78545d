"""Deterministic report dictionaries and plain-text tables.

JSON words are comma-joined labels (``"-1,v"``); tables use the compact form.
Fully commutative elements (every element of W_2) are written as their
Cartier-Foata word, layers concatenated, so ``13·24·13`` prints as ``132413``.
Member lists are still sorted by ``(length, canonical word)`` and dictionaries
are built in a fixed key order, so repeated runs are byte-identical.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Sequence

from . import tables as T
from .cells import a2_structure, cell_size_report, two_sided_cells
from .errors import NotBuiltinType
from .heaps import display_word, layer_word

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem
    from .elements import GroupElement

__all__ = [
    "system_field",
    "stubs_report",
    "cells_report",
    "zero_cell_report",
    "sizes_report",
    "render_table",
    "render_stubs",
    "render_cells",
    "render_zero_cell",
    "render_sizes",
]


def system_field(W: CoxeterSystem) -> Any:
    return W.to_json() if W.type_tag == "Custom" else W.descriptor


def word_json(w: GroupElement) -> str:
    return w.system.format_word(layer_word(w))


word_text = display_word


def _words(ws: Sequence[GroupElement]) -> list[str]:
    return [word_json(w) for w in ws]


def stubs_report(W: CoxeterSystem) -> dict:
    st = a2_structure(W)
    return {
        "system": system_field(W),
        "w2_empty": st.empty,
        "stubs": [
            {
                "word": word_json(x.element),
                "cf": x.display(),
                "side": x.side.value,
                "simple_class": x.class_id_simple,
                "slide_class": x.class_id_slide,
            }
            for x in st.stubs
        ],
    }


def cells_report(W: CoxeterSystem) -> dict:
    st = a2_structure(W)
    out = stubs_report(W)
    out["right_cells"] = [
        {"stub": word_json(x.element), "members": _words(c)} for x, c in zip(st.stubs, st.right_cell_members)
    ]
    out["zero_cells"] = [
        {"x": word_json(st.stubs[i].element), "y": word_json(st.stubs[j].element), "members": _words(c)}
        for (i, j), c in sorted(st.zero_cells.items())
    ]
    two = two_sided_cells(W)
    out["two_sided"] = [{"class": k + 1, "size": len(c)} for k, c in enumerate(two.cells)]
    if st.empty:
        out["tables"] = {"N": [], "n": [], "sizes": {"total": 0}}
    else:
        rep = cell_size_report(W)
        out["tables"] = {
            "N": rep["N"],
            "n": rep["n"],
            "sizes": {
                "class_reps": rep["class_reps"],
                "one_cells": rep["one_cell_sizes"],
                "right_cells": [len(c) for c in st.right_cell_members],
                "two_sided": rep["two_sided_sizes"],
                "total": rep["total"],
            },
        }
    return out


def zero_cell_report(W: CoxeterSystem, x: GroupElement, y: GroupElement) -> dict:
    st = a2_structure(W)
    members = st.zero_cell(st.index_of(x), st.index_of(y))
    return {
        "system": system_field(W),
        "x": word_json(x),
        "y": word_json(y),
        "size": len(members),
        "members": _words(members),
    }


def _row(quantity: str, got: Any, want: Any) -> dict:
    verdict = "-" if want is None else ("MATCH" if got == want else "MISMATCH")
    return {"quantity": quantity, "enumerated": got, "expected": want, "verdict": verdict}


def sizes_report(W: CoxeterSystem) -> dict:
    """Enumerated sizes next to the closed forms, one verdict per row."""
    st = a2_structure(W)
    rows: list[dict] = []
    try:
        T.family_of(W)
        closed = True
    except NotBuiltinType:
        closed = False
    if st.empty:
        rows.append(_row("|W_2|", 0, 0 if not closed else T.expected_w2_size(W)))
    elif closed:
        rows.append(_row("stubs", len(st.stubs), T.expected_stub_count(W)))
        classes = T.expected_simple_classes(W)
        idx = [st.index_of(W.element([W.index(a) for a in rep])) for rep, _ in classes]
        names = [W.compact_word([W.index(a) for a in rep]) for rep, _ in classes]
        N_i = T.expected_one_cell_sizes(W)
        Nm = T.expected_N(W)
        all_classes = st.classes(simple_only=True)
        for k, (i, (_, size)) in enumerate(zip(idx, classes)):
            got_n = len(all_classes[st.stubs[i].class_id_simple - 1])
            rows.append(_row(f"n_{k + 1} [{names[k]}]", got_n, size))
        for k, i in enumerate(idx):
            rows.append(_row(f"N_{k + 1} = |R_{names[k]}|", len(st.right_cell_members[i]), N_i[k]))
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                rows.append(_row(f"N_{a + 1}{b + 1}", len(st.zero_cell(i, j)), Nm[a][b]))
        rows.append(_row("2-cells", sorted(two_sided_cells(W).sizes()), sorted(T.expected_two_sided_sizes(W))))
        rows.append(_row("|W_2|", len(st.stub_of), T.expected_w2_size(W)))
    else:
        rep = cell_size_report(W)
        for k, (name, size) in enumerate(zip(rep["class_reps"], rep["one_cell_sizes"])):
            rows.append(_row(f"N_{k + 1} = |R_{name}|", size, None))
        rows.append(_row("2-cells", sorted(rep["two_sided_sizes"]), None))
        rows.append(_row("|W_2|", rep["total"], None))
    return {
        "system": system_field(W),
        "w2_empty": st.empty,
        "rows": rows,
        "all_match": all(r["verdict"] != "MISMATCH" for r in rows),
    }


# ---------------------------------------------------------------------------
# text rendering


def render_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _desc(W: CoxeterSystem) -> str:
    return W.descriptor if W.type_tag != "Custom" else "custom system"


def render_stubs(W: CoxeterSystem) -> str:
    st = a2_structure(W)
    if st.empty:
        return f"{_desc(W)}: W_2 empty (no commuting generators), 0 stubs\n"
    rows = [(word_text(x.element), x.display(), x.class_id_simple, x.class_id_slide) for x in st.stubs]
    head = f"{_desc(W)}: {len(rows)} stubs\n"
    return head + render_table(["stub", "layers", "simple", "slide"], rows)


def render_cells(W: CoxeterSystem, simple_only: bool = False) -> str:
    st = a2_structure(W)
    if st.empty:
        return f"{_desc(W)}: W_2 empty (no commuting generators)\n"
    out = [f"{_desc(W)}: |W_2| = {len(st.stub_of)}, {len(st.stubs)} right cells"]
    for x, c in zip(st.stubs, st.right_cell_members):
        out.append(f"R[{x.display()}] ({len(c)}): " + " ".join(word_text(w) for w in c))
    mode = "simple-slide" if simple_only else "slide"
    for k, cls in enumerate(st.classes(simple_only), 1):
        out.append(f"{mode} class {k} ({len(cls)}): " + " ".join(word_text(x.element) for x in cls))
    for k, c in enumerate(two_sided_cells(W).cells, 1):
        out.append(f"two-sided cell {k}: size {len(c)}")
    return "\n".join(out) + "\n"


def render_zero_cell(rep: dict, W: CoxeterSystem) -> str:
    x = W.compact_word(W.parse_word(rep["x"]))
    y = W.compact_word(W.parse_word(rep["y"]))
    members = [W.compact_word(W.parse_word(m)) for m in rep["members"]]
    return f"I({x},{y}) = {{{', '.join(members)}}}  (size {rep['size']})\n"


def render_sizes(rep: dict, W: CoxeterSystem) -> str:
    rows = [
        (r["quantity"], r["enumerated"], "-" if r["expected"] is None else r["expected"], r["verdict"])
        for r in rep["rows"]
    ]
    head = f"{_desc(W)}" + (": W_2 empty\n" if rep["w2_empty"] else "\n")
    return head + render_table(["quantity", "enumerated", "closed form", "verdict"], rows)
