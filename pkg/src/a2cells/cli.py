"""Command-line front end.

Exit codes: 0 success; 1 a verification failed; 2 the system is not
a(2)-finite; 3 a word or stub argument is invalid; 4 the group is too large
for the oracle; 5 the system argument is invalid.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from .coxeter import load_system
from .errors import (
    BadWord,
    CoxeterSystemError,
    GroupTooLarge,
    NotA2Finite,
    NotReduced,
    UnknownStubWord,
)
from .heaps import heap_of_word, heap_to_dot, heap_to_tikz, is_fc_reduced_word
from .oracle import DEFAULT_BOUND, SLOW_THRESHOLD, Oracle, compare
from .report import (
    cells_report,
    render_cells,
    render_sizes,
    render_stubs,
    render_zero_cell,
    sizes_report,
    stubs_report,
    zero_cell_report,
)
from .verify import all_passed, run_checks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_NOT_A2 = 2
EXIT_BAD_WORD = 3
EXIT_TOO_LARGE = 4
EXIT_BAD_SYSTEM = 5


@dataclass
class RunConfig:
    system: str
    command: str
    fmt: str = "table"
    out: str | None = None
    simple_only: bool = False
    slow_ok: bool = False
    bound: int = DEFAULT_BOUND
    extra: dict = field(default_factory=dict)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_stubs(cfg: RunConfig) -> int:
    W = load_system(cfg.system)
    _emit(cfg, _dumps(stubs_report(W)) if cfg.fmt == "json" else render_stubs(W))
    return EXIT_OK


def cmd_cells(cfg: RunConfig) -> int:
    W = load_system(cfg.system)
    _emit(cfg, _dumps(cells_report(W)) if cfg.fmt == "json" else render_cells(W, cfg.simple_only))
    return EXIT_OK


def _stub_arg(W, text: str | None, name: str):
    if not text:
        raise UnknownStubWord(f"--{name} is required")
    return W.element(W.parse_word(text))


def cmd_zero_cell(cfg: RunConfig) -> int:
    W = load_system(cfg.system)
    x = _stub_arg(W, cfg.extra.get("x"), "x")
    y = _stub_arg(W, cfg.extra.get("y"), "y")
    rep = zero_cell_report(W, x, y)
    _emit(cfg, _dumps(rep) if cfg.fmt == "json" else render_zero_cell(rep, W))
    return EXIT_OK


def cmd_sizes(cfg: RunConfig) -> int:
    W = load_system(cfg.system)
    rep = sizes_report(W)
    _emit(cfg, _dumps(rep) if cfg.fmt == "json" else render_sizes(rep, W))
    return EXIT_OK if rep["all_match"] else EXIT_FAILED


def cmd_verify(cfg: RunConfig) -> int:
    W = load_system(cfg.system)
    checks = run_checks(W)
    ok = all_passed(checks)
    if cfg.fmt == "json":
        text = _dumps(
            {
                "system": cfg.system,
                "passed": ok,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
            }
        )
    else:
        lines = [c.line() for c in checks]
        first = next((c for c in checks if not c.passed), None)
        summary = f"{cfg.system}: {sum(c.passed for c in checks)}/{len(checks)} checks passed"
        if first is not None:
            summary += f"; first failure: {first.name}"
        text = "\n".join(lines + [summary]) + "\n"
    _emit(cfg, text)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_oracle_verify(cfg: RunConfig) -> int:
    W = load_system(cfg.system)
    bound = cfg.bound if cfg.slow_ok else min(cfg.bound, SLOW_THRESHOLD)
    t0 = time.perf_counter()
    try:
        orc = Oracle(W, bound)
    except GroupTooLarge as exc:
        hint = "" if cfg.slow_ok else f" (groups over {SLOW_THRESHOLD} elements need --slow-ok)"
        raise GroupTooLarge(f"{exc}{hint}") from None
    results = compare(W, orc)
    ok = all(r[1] for r in results)
    elapsed = time.perf_counter() - t0
    if cfg.fmt == "json":
        text = _dumps(
            {
                "system": cfg.system,
                "elements": orc.N,
                "passed": ok,
                "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in results],
            }
        )
    else:
        lines = [f"{'PASS' if p else 'FAIL'}  {n}" + (f": {d}" if d else "") for n, p, d in results]
        verdict = "agreement" if ok else "DISAGREEMENT"
        lines.append(f"{cfg.system}: {verdict} on {orc.N} elements ({elapsed:.1f}s)")
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_heap(cfg: RunConfig) -> int:
    W = load_system(cfg.system)
    text = cfg.extra.get("word")
    if text is None:
        raise BadWord("--word is required")
    word = W.parse_word(text)
    try:
        if not is_fc_reduced_word(W, word):
            print(f"warning: {W.compact_word(word)} is not fully commutative", file=sys.stderr)
    except NotReduced:
        print(f"warning: {W.compact_word(word)} is not reduced", file=sys.stderr)
    h = heap_of_word(W, word)
    if cfg.fmt == "json":
        out = _dumps(
            {
                "word": W.format_word(word),
                "labels": [h.label(i) for i in range(h.size)],
                "levels": list(h.levels),
                "covers": [list(c) for c in h.covers()],
            }
        )
    elif cfg.fmt == "table":
        by_level: dict[int, list[str]] = {}
        for i, lv in enumerate(h.levels):
            by_level.setdefault(lv, []).append(f"{h.label(i)}@{i}")
        out = "".join(f"level {lv}: {' '.join(by_level[lv])}\n" for lv in sorted(by_level, reverse=True))
    elif cfg.fmt == "tikz":
        out = heap_to_tikz(h)
    else:
        out = heap_to_dot(h)
    _emit(cfg, out)
    return EXIT_OK


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "stubs": cmd_stubs,
    "cells": cmd_cells,
    "zero-cell": cmd_zero_cell,
    "sizes": cmd_sizes,
    "verify": cmd_verify,
    "oracle-verify": cmd_oracle_verify,
    "heap": cmd_heap,
}


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", dest="fmt", choices=("table", "json", "dot", "tikz"), default=argparse.SUPPRESS)
    p.add_argument("--out", default=argparse.SUPPRESS, help="write output to PATH")
    p.add_argument("--slow-ok", action="store_true", default=argparse.SUPPRESS, help="allow slow oracle runs")
    p.add_argument("--bound", type=int, default=argparse.SUPPRESS, help="group-size bound for the oracle")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="a2cells",
        description="Kazhdan-Lusztig cells of a-value 2 in a(2)-finite Coxeter groups.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    system_help = "descriptor such as B:4, E:1,2, Ctilde:5, a JSON object, or a .json file"

    p = sub.add_parser("stubs", parents=[common], help="list the left stubs of a-value 2")
    p.add_argument("system", help=system_help)

    p = sub.add_parser("cells", parents=[common], help="right cells, 0-cells and two-sided cells")
    p.add_argument("system", help=system_help)
    p.add_argument("--simple-only", action="store_true", help="list simple-slide classes instead of slide classes")

    p = sub.add_parser("zero-cell", parents=[common], help="the 0-cell I(x,y) for two stubs")
    p.add_argument("system", help=system_help)
    p.add_argument("--x", required=True, help="left stub, comma-joined labels")
    p.add_argument("--y", required=True, help="left stub, comma-joined labels")

    p = sub.add_parser("sizes", parents=[common], help="enumerated sizes against closed forms")
    p.add_argument("system", help=system_help)

    p = sub.add_parser("verify", parents=[common], help="run the golden checks for one system")
    p.add_argument("system", help=system_help)

    p = sub.add_parser("oracle-verify", parents=[common], help="compare with cells computed from definitions")
    p.add_argument("system", help=system_help)

    p = sub.add_parser("heap", parents=[common], help="render the heap of a word as DOT (or TikZ)")
    p.add_argument("system", help=system_help)
    p.add_argument("--word", required=True, help="comma-joined labels")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    fmt = getattr(ns, "fmt", None) or ("dot" if ns.command == "heap" else "table")
    extra = {k: getattr(ns, k) for k in ("x", "y", "word") if hasattr(ns, k)}
    return RunConfig(
        system=ns.system,
        command=ns.command,
        fmt=fmt,
        out=getattr(ns, "out", None),
        simple_only=getattr(ns, "simple_only", False),
        slow_ok=getattr(ns, "slow_ok", False),
        bound=getattr(ns, "bound", DEFAULT_BOUND),
        extra=extra,
    )


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = _config(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except NotA2Finite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A2
    except (UnknownStubWord, BadWord) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_WORD
    except GroupTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except CoxeterSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_SYSTEM


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
