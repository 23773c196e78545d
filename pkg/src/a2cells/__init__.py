"""Kazhdan-Lusztig cells of a-value 2 in a(2)-finite Coxeter groups.

The group arithmetic runs on a compiled kernel when it is built and on a
pure-Python fallback otherwise (``A2CELLS_PURE_PYTHON=1`` forces the latter).
"""

from .cells import (
    A2Triple,
    CellKind,
    CellPartition,
    a2_structure,
    a2_triple_of,
    cell_size_report,
    distinguished_involution,
    enumerate_W2,
    g,
    glued_product,
    left_cells,
    representative_zero_cells,
    right_cell_closure,
    right_cells,
    slide,
    slide_classes,
    stub_decomposition,
    transport_zero_cell,
    two_sided_cells,
    zero_cell,
)
from .coxeter import CoxeterSystem, build_system, classify, load_system, system_from_matrix
from .elements import GroupElement, weak_leq_left, weak_leq_right
from .errors import A2CellsError
from .heaps import cartier_foata, fc_a_classify, heap_of_word, is_fc, width
from .kernel import available_backends, default_backend
from .stars import left_lower_star, left_upper_star, right_lower_star, right_upper_star
from .stubs import Side, Stub, closed_form_stubs, enumerate_stubs, is_left_stub, is_right_stub

__version__ = "0.1.0"

__all__ = [
    "A2CellsError",
    "A2Triple",
    "CellKind",
    "CellPartition",
    "CoxeterSystem",
    "GroupElement",
    "Side",
    "Stub",
    "a2_structure",
    "a2_triple_of",
    "available_backends",
    "build_system",
    "cartier_foata",
    "cell_size_report",
    "classify",
    "closed_form_stubs",
    "default_backend",
    "distinguished_involution",
    "enumerate_W2",
    "enumerate_stubs",
    "fc_a_classify",
    "g",
    "glued_product",
    "heap_of_word",
    "is_fc",
    "is_left_stub",
    "is_right_stub",
    "left_cells",
    "left_lower_star",
    "left_upper_star",
    "load_system",
    "representative_zero_cells",
    "right_cell_closure",
    "right_cells",
    "right_lower_star",
    "right_upper_star",
    "slide",
    "slide_classes",
    "stub_decomposition",
    "system_from_matrix",
    "transport_zero_cell",
    "two_sided_cells",
    "weak_leq_left",
    "weak_leq_right",
    "width",
    "zero_cell",
]
