"""Backend selection for the reflection kernel.

The compiled ``_ckernel`` is used when it imports; otherwise the pure-Python
``_pykernel`` takes over.  Set ``A2CELLS_PURE_PYTHON=1`` to force the fallback.
Both backends expose the same methods; states are opaque (``bytes`` for the
compiled kernel, ``tuple`` for the fallback) and must not be mixed.
"""

from __future__ import annotations

import os
from typing import TYPE_CHECKING

from ._pykernel import PyKernel
from .errors import UnsupportedBond
from .rings import bond_code

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem

try:
    from ._ckernel import CKernel
except ImportError:  # pragma: no cover - depends on the build
    CKernel = None

__all__ = ["available_backends", "default_backend", "make_kernel", "kernel_class"]


def available_backends() -> list[str]:
    return (["cython"] if CKernel is not None else []) + ["python"]


def default_backend() -> str:
    if os.environ.get("A2CELLS_PURE_PYTHON", "").strip() not in ("", "0"):
        return "python"
    return available_backends()[0]


def kernel_class(backend: str):
    if backend == "cython":
        if CKernel is None:
            raise RuntimeError("the compiled kernel is not built")
        return CKernel
    if backend == "python":
        return PyKernel
    raise ValueError(f"unknown backend {backend!r}")


def make_kernel(system: CoxeterSystem):
    n = system.size
    codes = [[0] * n for _ in range(n)]
    for i, j, m in system.edges:
        c = bond_code(m)
        if c is None:
            raise UnsupportedBond(
                f"bond {m} between {system.labels[i]} and {system.labels[j]} is outside the INT/SQRT2/PHI rings"
            )
        codes[i][j] = codes[j][i] = c
    return kernel_class(system.backend)(n, system.ring.code, codes)
