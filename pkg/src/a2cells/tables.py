"""Closed-form data for the nontrivially a(2)-finite families.

Everything here is written in terms of generator *labels* and is
parameterised by rank, so the checks in :mod:`a2cells.verify` and the CLI
``sizes`` command can compare enumeration against formulas without any
external files.  ``n`` always means the number of generators and
``beta(n) = n choose 2``.

>>> from a2cells.coxeter import build_system
>>> expected_stub_count(build_system("Ctilde:4"))
11
>>> expected_simple_classes(build_system("B:4"))
[(('1', '3'), 4), (('2', '4'), 2)]
>>> expected_two_sided_sizes(build_system("E:1,2"))
[16, 100]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING

from .errors import NotBuiltinType

if TYPE_CHECKING:
    from .coxeter import CoxeterSystem

__all__ = [
    "beta",
    "family_of",
    "closed_form_stub_words",
    "expected_stub_count",
    "expected_simple_classes",
    "expected_slide_classes",
    "expected_N",
    "expected_one_cell_sizes",
    "expected_two_sided_sizes",
    "expected_w2_size",
    "RepresentativeZeroCell",
    "representative_zero_cell_data",
    "B4_STUB_ORDER",
    "B4_N_MATRIX",
    "B4_ZERO_CELLS",
    "B4_RIGHT_CELL_SIZES",
]

Labels = tuple  # tuple[str, ...]


def beta(n: int) -> int:
    return comb(n, 2)


def family_of(system: CoxeterSystem) -> tuple[str, int, tuple]:
    """``(family, n, params)`` for a built-in nontrivially a(2)-finite system."""
    tag = system.type_tag
    n = system.size
    ok = {
        "A": n >= 3,
        "B": n >= 3,
        "Ctilde": n >= 5,
        "E": True,
        "F": n >= 4,
        "H": n >= 3,
    }.get(tag, False)
    if not ok:
        raise NotBuiltinType(f"{system.descriptor} has no closed-form a(2) data")
    return tag, n, system.params


def _s(*xs) -> Labels:
    return tuple(str(x) for x in xs)


# ---------------------------------------------------------------------------
# stubs


def _path_stubs(n: int) -> list[Labels]:
    s1 = [_s(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1)]
    s2 = [_s(i, i - 1, i + 1) for i in range(2, n)]
    return s1 + s2


def closed_form_stub_words(system: CoxeterSystem) -> list[Labels]:
    """Every left a(2)-stub as a reduced word of labels (Cartier-Foata layers concatenated)."""
    fam, n, params = family_of(system)
    if fam == "A":
        return _path_stubs(n)
    if fam == "B":
        return _path_stubs(n) + [_s(1, 2, 1, 3)]
    if fam == "Ctilde":
        return _path_stubs(n) + [_s(1, 2, 1, 3), _s(n, n - 1, n - 2, n)]
    if fam == "F":
        zs = [_s(1, 2, 3, 2, 4), _s(2, 3, 2, 4)]
        zs += [_s(*range(i, 1, -1), 1, 3) for i in range(3, n + 1)]
        return _path_stubs(n) + zs
    if fam == "H":
        zs = [_s(*range(i, 0, -1), 2, 1, 3) for i in range(2, n + 1)]
        return _path_stubs(n) + [_s(1, 2, 1, 3)] + zs
    # E_{q,r}
    q, r = params
    labels = system.labels
    out: list[Labels] = [(labels[a], labels[b]) for a, b in system.commuting_pairs]
    out += [_s(i, i - 1, i + 1) for i in range(-q + 1, r)]
    out += [_s(0, -1, "v"), _s(0, 1, "v")]
    out += [_s(*range(s, -1, -1), -1, "v") for s in range(1, r + 1)]
    out += [_s(*range(s, 1), 1, "v") for s in range(-q, 0)]
    out.append(_s("v", 0, -1, 1))
    return out


def expected_stub_count(system: CoxeterSystem) -> int:
    fam, n, _ = family_of(system)
    return {
        "A": beta(n) - 1,
        "B": beta(n),
        "Ctilde": beta(n) + 1,
        "E": beta(n + 1) - 1,
        "F": beta(n + 1) - 1,
        "H": beta(n + 1) - 1,
    }[fam]


# ---------------------------------------------------------------------------
# classes, N_ij and cell sizes


def expected_simple_classes(system: CoxeterSystem) -> list[tuple[Labels, int]]:
    """Simple-slide classes as ``(representative, size)``, in the customary order."""
    fam, n, params = family_of(system)
    if fam == "A":
        return [(_s(1, 3), beta(n) - 1)]
    if fam == "B":
        if n == 3:
            return [(_s(1, 3), 3)]
        return [(_s(1, 3), n), (_s(2, 4), beta(n - 1) - 1)]
    if fam == "Ctilde":
        return [(_s(1, 3), n - 1), (_s(2, 4), beta(n - 2) - 1), (_s(n - 2, n), n - 1), (_s(1, n), 1)]
    if fam == "E":
        q, r = params
        if q == 1 and r == 1:
            return [(_s(-1, "v"), 3), (_s(1, "v"), 3), (_s(-1, 1), 3)]
        if q == 1:
            return [(_s(-1, "v"), n - 1), (_s(1, "v"), beta(n))]
        return [(_s(-1, 1), beta(n + 1) - 1)]
    if fam == "F":
        if n == 4:
            return [(_s(1, 3), 9)]
        return [(_s(1, 3), 3 * n - 3), (_s(3, 5), beta(n - 2) - 1)]
    # H
    if n == 3:
        return [(_s(1, 3), 5)]
    return [(_s(1, 3), 2 * n - 1), (_s(2, 4), beta(n - 1) - 1)]


def expected_slide_classes(system: CoxeterSystem) -> list[tuple[Labels, int]]:
    """Full slide classes: one class except in E_{1,r}, where all edges are simple."""
    fam, n, params = family_of(system)
    if fam == "E" and params[0] == 1:
        return expected_simple_classes(system)
    rep = _s(-1, 1) if fam == "E" else _s(1, 3)
    return [(rep, expected_stub_count(system))]


def expected_N(system: CoxeterSystem) -> list[list[int]]:
    """``N_ij = |I(w_i, w_j)|`` for the representatives of :func:`expected_simple_classes`."""
    fam, n, params = family_of(system)
    d = len(expected_simple_classes(system))
    if fam == "Ctilde":
        return [[4, 2, 1, 2], [2, 4, 2, 1], [1, 2, 4, 2], [2, 1, 2, 4]]
    if fam == "E":
        return [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    if d == 1:
        return [[1]]
    if fam == "H":
        return [[2, 2], [2, 2]]
    return [[2, 1], [1, 2]]  # B_n, F_n with n beyond the base case


def _int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral closed form {x}")
    return int(x)


def expected_one_cell_sizes(system: CoxeterSystem) -> list[int]:
    """``N_i = |R_{w_i}|`` in class order."""
    fam, n, params = family_of(system)
    F = Fraction
    if fam == "A":
        return [beta(n) - 1]
    if fam == "B":
        return [3] if n == 3 else [beta(n + 1), n * n - 2 * n]
    if fam == "Ctilde":
        big = n * n + 1
        return [big, 2 * n * n - 6 * n + 5, big, _int(F(n * n, 2) + F(3 * n, 2) + 2)]
    if fam == "E":
        q, r = params
        if q == 1 and r == 1:
            return [3, 3, 3]
        if q == 1:
            return [n - 1, beta(n)]
        return [beta(n + 1) - 1]
    if fam == "F":
        return [9] if n == 4 else [_int(F(n * n, 2) + F(7 * n, 2) - 4), (n - 1) ** 2]
    return [5] if n == 3 else [2 * (beta(n + 1) - 1)] * 2


def expected_two_sided_sizes(system: CoxeterSystem) -> list[int]:
    fam, n, params = family_of(system)
    F = Fraction
    if fam == "A":
        return [(beta(n) - 1) ** 2]
    if fam == "B":
        return [9] if n == 3 else [_int(F(n**4, 2) - 2 * n**3 + F(7 * n * n, 2))]
    if fam == "Ctilde":
        return [n**4 - 6 * n**3 + 20 * n * n - 21 * n + 10]
    if fam == "E":
        q, r = params
        if q == 1 and r == 1:
            return [9, 9, 9]
        if q == 1:
            return [(n - 1) ** 2, beta(n) ** 2]
        return [(beta(n + 1) - 1) ** 2]
    if fam == "F":
        return [81] if n == 4 else [_int(F(n**4, 2) - 2 * n**3 + F(33 * n * n, 2) - 29 * n + 14)]
    return [25] if n == 3 else [2 * (beta(n + 1) - 1) ** 2]


def expected_w2_size(system: CoxeterSystem) -> int:
    return sum(expected_two_sided_sizes(system))


# ---------------------------------------------------------------------------
# representative 0-cells


@dataclass(frozen=True)
class RepresentativeZeroCell:
    x: Labels
    y: Labels
    members: tuple[Labels, ...]


def representative_zero_cell_data(system: CoxeterSystem) -> list[RepresentativeZeroCell]:
    fam, n, params = family_of(system)
    R = RepresentativeZeroCell
    if fam == "A" or (fam in ("B", "H") and n == 3):
        return [R(_s(1, 3), _s(1, 3), (_s(1, 3),))]
    if fam in ("B", "H"):
        return [R(_s(2, 4), _s(2, 4), (_s(2, 4), _s(2, 1, 2, 4)))]
    if fam == "Ctilde":
        z = _s(*range(4, n + 1), *range(n - 1, 3, -1))
        members = (_s(2, 4), _s(2, 1, 2, 4), _s(2) + z, _s(2, 1, 2) + z)
        return [R(_s(2, 4), _s(2, 4), members)]
    if fam == "E":
        return [R(x, x, (x,)) for x in (_s(-1, "v"), _s(1, "v"), _s(-1, 1))]
    if fam == "F":
        if n == 4:
            return [R(_s(2, 4), _s(2, 4), (_s(2, 4),))]
        return [R(_s(2, 4), _s(2, 4), (_s(2, 4), _s(2, 4, 3, 5, 2, 4)))]
    raise NotBuiltinType(fam)  # pragma: no cover


# ---------------------------------------------------------------------------
# B4 worked example (compact words over labels 1..4)

B4_STUB_ORDER = ("1213", "213", "13", "14", "24", "324")

B4_N_MATRIX = (
    (2, 2, 2, 2, 1, 1),
    (2, 2, 2, 2, 1, 1),
    (2, 2, 2, 2, 1, 1),
    (2, 2, 2, 2, 1, 1),
    (1, 1, 1, 1, 2, 2),
    (1, 1, 1, 1, 2, 2),
)

B4_ZERO_CELLS = (
    (("121321", "1213241321"), ("12132", "121324132"), ("1213", "12132413"),
     ("12134", "1213241"), ("121324",), ("1213243",)),
    (("21321", "213241321"), ("2132", "21324132"), ("213", "2132413"),
     ("2134", "213241"), ("21324",), ("213243",)),
    (("1321", "13241321"), ("132", "1324132"), ("13", "132413"),
     ("134", "13241"), ("1324",), ("13243",)),
    (("41321", "1241321"), ("4132", "124132"), ("413", "12413"),
     ("14", "1241"), ("124",), ("1243",)),
    (("241321",), ("24132",), ("2413",), ("214",), ("24", "2124"), ("243", "21243")),
    (("3241321",), ("324132",), ("32413",), ("3214",), ("324", "32124"), ("3243", "321243")),
)

B4_RIGHT_CELL_SIZES = (10, 10, 10, 10, 8, 8)
