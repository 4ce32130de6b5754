"""
Cohomology of the secondary cochain complexes through the homology engine.
"""

import logging
import time
from dataclasses import dataclass

from abelian_core.homology import homology_at
from abelian_core.int_matrix import IntMatrix
from abelian_core.snf import in_column_span
from complexes.coboundary import assemble_delta
from complexes.settings import ComplexData
from group_data.actions import trivial_action
from group_data.cocycles import Cocycle3
from group_data.finite_group import trivial_group
from utilities.checks import CheckResult
from utilities.config_utils import DEFAULT_CEILING
from utilities.errors import DimensionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComplexSlice:
    """C^{n-1} --D_prev--> C^n --D_cur--> C^{n+1} on free covers."""

    degree: int
    R_prev: IntMatrix
    R_cur: IntMatrix
    R_next: IntMatrix
    D_prev: IntMatrix
    D_cur: IntMatrix

    def composite_failures(self):
        """Entries (row, col) of D_cur·D_prev that escape col(R_next)."""
        composite = self.D_cur @ self.D_prev
        moduli = self.R_next.monomial_moduli()
        if moduli is not None:
            for i, j, v in composite.items():
                m = moduli[i]
                if (m == 0) or v % m:
                    yield [i, j]
            return
        for j, column in enumerate(composite.columns()):
            if any(column) and not in_column_span(self.R_next, column):
                yield [None, j]

    def check(self):
        name = f"delta_squared_matrix_{self.degree}"
        for witness in self.composite_failures():
            return CheckResult(name, False, witness)
        return CheckResult(name, True)

    def homology(self):
        return homology_at(self.R_cur, self.D_prev, self.D_cur, self.R_next)


def complex_slice(data, n, ceiling=DEFAULT_CEILING):
    if n < 0:
        raise DimensionError(f"negative degree {n}")
    current = assemble_delta(data, n, ceiling)
    if n == 0:
        R_prev = IntMatrix.zeros(0, 0)
        D_prev = IntMatrix.zeros(current.source.ambient_rank, 0)
    else:
        previous = assemble_delta(data, n - 1, ceiling)
        R_prev = previous.source.relations
        D_prev = previous.matrix
    return ComplexSlice(
        degree=n,
        R_prev=R_prev,
        R_cur=current.source.relations,
        R_next=current.target.relations,
        D_prev=D_prev,
        D_cur=current.matrix,
    )


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    group: object  # FgAbGroup
    source_rank: int
    target_rank: int
    millis: int

    @property
    def invariant_factors(self):
        return list(self.group.torsion)

    @property
    def free_rank(self):
        return self.group.free_rank

    def to_dict(self):
        return {
            "degree": self.degree,
            "invariant_factors": self.invariant_factors,
            "free_rank": self.free_rank,
            "source_rank": self.source_rank,
            "target_rank": self.target_rank,
            "millis": self.millis,
        }


def cohomology(data, n, ceiling=DEFAULT_CEILING):
    """H^n of the complex described by data, with sizes and wall time."""
    start = time.perf_counter()
    piece = complex_slice(data, n, ceiling)
    group = piece.homology()
    millis = int((time.perf_counter() - start) * 1000)
    logger.info("%s H^%d = %s (%d ms)", data.variant.value, n, group, millis)
    return CohomologyResult(
        degree=n,
        group=group,
        source_rank=piece.R_cur.rows,
        target_rank=piece.R_next.rows,
        millis=millis,
    )


def secondary_cohomology_abelian(A, B, n, ceiling=DEFAULT_CEILING):
    """₂H^n(A, B) for a finite A."""
    if not A.is_finite:
        raise DimensionError(f"A must be finite, got {A}")
    return cohomology(ComplexData.abelian(A, B), n, ceiling).group


def secondary_cohomology_triple(action_a, action_b, kappa, n, ceiling=DEFAULT_CEILING):
    """
    ₂H^n(G, A, κ; B).

    Raises:
        AxiomError: if κ fails the 3-cocycle condition, with the quadruple
        ScaleGuardError: if δ_n does not fit under the ceiling
    """
    return cohomology(ComplexData.triple(action_a, action_b, kappa), n, ceiling).group


def classical_cohomology(action_b, n, ceiling=DEFAULT_CEILING):
    """H^n(G, B) from the bar complex."""
    return cohomology(ComplexData.classical(action_b), n, ceiling).group


def degenerate_triple(A, B):
    """(1, A, 0; B): the triple complex over the trivial group."""
    G = trivial_group()
    action_a = trivial_action(G, A)
    return ComplexData.triple(action_a, trivial_action(G, B), Cocycle3.zero(action_a))
