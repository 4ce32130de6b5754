"""
Actions of a finite group on a finitely generated abelian group by
automorphisms, one integer matrix per group element acting on generator
coordinates (column vectors).
"""

import logging
from dataclasses import dataclass

from abelian_core.fg_groups import cokernel_invariants
from abelian_core.homology import homology_at
from abelian_core.int_matrix import IntMatrix
from utilities.errors import AxiomError, DimensionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GAction:
    group: object   # FiniteGroup
    module: object  # FgAbGroup
    mats: tuple     # IntMatrix per group element

    def act(self, g, x):
        """g·x, reduced to the canonical representative."""
        return self.module.reduce(self.mats[g].apply(list(x)))

    def matrix(self, g):
        return self.mats[g]


def _induced_zero(module, vector):
    return not any(module.reduce(vector))


def validate_action(cand):
    """
    Check that cand.mats define a left action by automorphisms.

    Order of the checks: shapes, identity, well-definedness, automorphism,
    homomorphism. The first failure raises.

    Raises:
        DimensionError: wrong number of matrices or wrong matrix shape
        AxiomError: with axiom one of "identity", "well-defined",
            "automorphism", "homomorphism" and the offending element(s)
    """
    G, M = cand.group, cand.module
    r = M.rank
    if len(cand.mats) != G.order:
        raise DimensionError(f"{len(cand.mats)} action matrices for a group of order {G.order}")
    for g, mat in enumerate(cand.mats):
        if mat.shape != (r, r):
            raise DimensionError(f"action matrix of element {g} has shape {mat.shape}, expected {(r, r)}")

    e = G.identity
    diff = cand.mats[e] - IntMatrix.identity(r)
    for t, column in enumerate(diff.columns()):
        if not _induced_zero(M, column):
            raise AxiomError("identity", [e], f"identity element {e} moves generator {t}")

    for g, mat in enumerate(cand.mats):
        for t, d in enumerate(M.invariants):
            if d and not _induced_zero(M, [d * v for v in mat.column(t)]):
                raise AxiomError(
                    "well-defined", [g],
                    f"element {g}: {d} times the image of generator {t} is not zero",
                )

    relations = M.relation_matrix()
    empty = IntMatrix.zeros(r, 0)
    for g, mat in enumerate(cand.mats):
        kernel = homology_at(relations, empty, mat, relations, check=False)
        if not kernel.is_trivial:
            raise AxiomError("automorphism", [g], f"element {g} acts with kernel {kernel}")
        cokernel = cokernel_invariants(IntMatrix.hstack(mat, relations))
        if not cokernel.is_trivial:
            raise AxiomError("automorphism", [g], f"element {g} acts with cokernel {cokernel}")

    for g in G.elements():
        for h in G.elements():
            diff = cand.mats[g] @ cand.mats[h] - cand.mats[G.mul(g, h)]
            if any(not _induced_zero(M, column) for column in diff.columns()):
                raise AxiomError(
                    "homomorphism", [g, h],
                    f"acting by {h} then {g} differs from acting by {G.mul(g, h)}",
                )

    logger.debug("validated action of %s on %s", G, M)
    return cand


def action_from_rows(group, module, rows):
    """Build and validate an action from nested lists, one square matrix per element."""
    r = module.rank
    mats = tuple(IntMatrix.from_rows(m, cols=r) for m in rows)
    return validate_action(GAction(group, module, mats))


def trivial_action(group, module):
    identity = IntMatrix.identity(module.rank)
    return GAction(group, module, (identity,) * group.order)


def sign_action(group, module, sign):
    """
    g acts as sign[g]·id; sign must be a homomorphism to {±1}, which
    validation confirms.
    """
    identity = IntMatrix.identity(module.rank)
    mats = tuple(identity.scale(s) for s in sign)
    return validate_action(GAction(group, module, mats))
