# Exact integer linear algebra over finitely generated abelian groups

from abelian_core.fg_groups import FgAbGroup, GroupElement, PresentedGroup, cokernel_invariants
from abelian_core.homology import homology_at
from abelian_core.int_matrix import IntMatrix
from abelian_core.snf import SnfResult, kernel_basis, snf, solve_membership

__all__ = [
    "FgAbGroup",
    "GroupElement",
    "IntMatrix",
    "PresentedGroup",
    "SnfResult",
    "cokernel_invariants",
    "homology_at",
    "kernel_basis",
    "snf",
    "solve_membership",
]
