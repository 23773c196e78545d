"""Compare the compiled kernel against the pure-Python fallback.

    python benchmarks/bench_kernels.py            # default workloads
    python benchmarks/bench_kernels.py --repeat 5 --json bench.json

Each workload is run on both backends with a fresh cache; the best of
``--repeat`` runs is reported.  Results are also checked for equality so a
speedup never hides a disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from a2cells.cells import A2Structure, stub_records
from a2cells.coxeter import build_system
from a2cells.kernel import available_backends
from a2cells.oracle import enumerate_group


def _words(system, count: int, length: int, seed: int = 7) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    return [tuple(rng.randrange(system.size) for _ in range(length)) for _ in range(count)]


def wl_multiply(desc: str):
    def run(backend: str):
        W = build_system(desc, backend=backend)
        k = W.kernel
        out = []
        for w in _words(W, 2000, 30):
            st = k.rmul_word(k.identity(), w)
            out.append(tuple(k.reduce_left(st)))
        return out

    return f"reduce 2000 random words ({desc})", run


def wl_w2(desc: str):
    def run(backend: str):
        stub_records.cache_clear()
        W = build_system(desc, backend=backend)
        st = A2Structure(W)
        return sorted(w.word for w in st.stub_of)

    return f"enumerate W_2 ({desc})", run


def wl_group(desc: str):
    def run(backend: str):
        W = build_system(desc, backend=backend)
        return [w.word for w in enumerate_group(W, 2000)]

    return f"enumerate group ({desc})", run


WORKLOADS = [
    wl_multiply("B:6"),
    wl_multiply("H:4"),
    wl_w2("B:6"),
    wl_w2("E:2,3"),
    wl_w2("Ctilde:8"),
    wl_group("B:4"),
    wl_group("H:3"),
]


def best_of(fn, backend: str, repeat: int):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", dest="json_path")
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the fallback is available", file=sys.stderr)
    rows = []
    for name, fn in WORKLOADS:
        times = {}
        results = {}
        for b in backends:
            times[b], results[b] = best_of(fn, b, args.repeat)
        agree = len({json.dumps(r) for r in results.values()}) == 1
        speedup = times["python"] / times["cython"] if "cython" in times else None
        rows.append({"workload": name, **{f"{b}_s": round(t, 4) for b, t in times.items()},
                     "speedup": None if speedup is None else round(speedup, 2), "agree": agree})
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'cython':>9}  {'python':>9}  {'speedup':>7}  agree")
    for r in rows:
        c = f"{r['cython_s']:9.4f}" if "cython_s" in r else f"{'-':>9}"
        s = f"{r['speedup']:6.2f}x" if r["speedup"] else f"{'-':>7}"
        print(f"{r['workload'].ljust(width)}  {c}  {r['python_s']:9.4f}  {s}  {r['agree']}")
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
