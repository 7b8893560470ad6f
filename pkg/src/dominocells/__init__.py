"""Rank-r domino Robinson-Schensted correspondence for the hyperoctahedral group.

The package builds the bijection between signed permutations and same-shape
pairs of standard domino tableaux of arbitrary rank, the moving-through
calculus on those tableaux, the operator family generating reducible
combinatorial cells, and exhaustive checks of the cell theorems.
"""

from .signed_perm import Root, SignedPermutation, enumerate_group, parabolic_decompose, tau
from .tableau import DominoTableau, InvalidTableauError, SquareKind, Violation
from .insertion import TableauPair, insert_alpha, reverse_step, rs_inverse, rs_map
from .cycles import (
    CycleClass,
    ExtendedCyclePair,
    cycle,
    cycles,
    extended_cycle,
    is_somewhat_special,
    move_through,
    move_through_pair,
    move_through_set,
    moved_domino,
    special_form,
)
from .operators import OperatorDescriptor, apply_op, apply_op_tableau, in_domain, lambda_set
from .cells import (
    CellPartition,
    VerificationReport,
    operator_components,
    partition_irreducible,
    partition_reducible,
)

__all__ = [
    "CellPartition",
    "CycleClass",
    "DominoTableau",
    "ExtendedCyclePair",
    "VerificationReport",
    "InvalidTableauError",
    "OperatorDescriptor",
    "Root",
    "SignedPermutation",
    "SquareKind",
    "TableauPair",
    "Violation",
    "apply_op",
    "apply_op_tableau",
    "cycle",
    "cycles",
    "enumerate_group",
    "extended_cycle",
    "in_domain",
    "insert_alpha",
    "is_somewhat_special",
    "lambda_set",
    "move_through",
    "move_through_pair",
    "move_through_set",
    "moved_domino",
    "operator_components",
    "parabolic_decompose",
    "partition_irreducible",
    "partition_reducible",
    "reverse_step",
    "rs_inverse",
    "rs_map",
    "special_form",
    "tau",
]
