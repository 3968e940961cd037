"""Isomorphism types of centralizers in 1-connected simple compact Lie groups."""
from .errors import (
    CentralizerError,
    NotInCell,
    NotMinimalWeight,
    OracleDisagreement,
    UnclassifiableDiagram,
    ZeroRoot,
)
from .kernel import CentralizerResult, full_centralizer
from .local_type import LocalType, fg_set, local_type, psi_u
from .root_data import LieType, group_of_type, root_system
from .weyl_cell import CellPoint, cell_membership

__all__ = [
    "CellPoint",
    "CentralizerError",
    "CentralizerResult",
    "LieType",
    "LocalType",
    "NotInCell",
    "NotMinimalWeight",
    "OracleDisagreement",
    "UnclassifiableDiagram",
    "ZeroRoot",
    "cell_membership",
    "fg_set",
    "full_centralizer",
    "group_of_type",
    "local_type",
    "psi_u",
    "root_system",
]
