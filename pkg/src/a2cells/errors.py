"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`A2CellsError`,
so callers (notably the CLI) can map families of failures to exit codes.
"""

from __future__ import annotations

__all__ = [
    "A2CellsError",
    "CoxeterSystemError",
    "InvalidRank",
    "AsymmetricMatrix",
    "BadBond",
    "BadDescriptor",
    "ReducibleSystem",
    "UnsupportedBond",
    "SystemMismatch",
    "BadWord",
    "NotReduced",
    "NotFC",
    "NotA2Finite",
    "BondNotThree",
    "NotBuiltinType",
    "NotAValue2",
    "NotDescentCompatible",
    "NotShortStub",
    "NotAnEdge",
    "ResultNotStub",
    "NotRelated",
    "UnknownStubWord",
    "GroupTooLarge",
    "GroupInfinite",
]


class A2CellsError(Exception):
    """Base class for all library errors."""


class CoxeterSystemError(A2CellsError):
    """Problems constructing or interpreting a Coxeter system."""


class InvalidRank(CoxeterSystemError):
    pass


class AsymmetricMatrix(CoxeterSystemError):
    pass


class BadBond(CoxeterSystemError):
    pass


class BadDescriptor(CoxeterSystemError):
    pass


class ReducibleSystem(CoxeterSystemError):
    pass


class UnsupportedBond(CoxeterSystemError):
    """Bond orders whose cosine lies outside the INT/SQRT2/PHI rings."""


class SystemMismatch(A2CellsError):
    pass


class BadWord(A2CellsError):
    pass


class NotReduced(A2CellsError):
    pass


class NotFC(A2CellsError):
    pass


class NotA2Finite(A2CellsError):
    pass


class BondNotThree(A2CellsError):
    pass


class NotBuiltinType(A2CellsError):
    pass


class NotAValue2(A2CellsError):
    pass


class NotDescentCompatible(A2CellsError):
    pass


class NotShortStub(A2CellsError):
    pass


class NotAnEdge(A2CellsError):
    pass


class ResultNotStub(A2CellsError):
    pass


class NotRelated(A2CellsError):
    pass


class UnknownStubWord(A2CellsError):
    pass


class GroupTooLarge(A2CellsError):
    pass


class GroupInfinite(GroupTooLarge):
    """Enumeration hit the size bound on a group known or suspected to be infinite."""
