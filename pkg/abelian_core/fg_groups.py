"""
Finitely generated abelian groups in invariant-factor form, and groups
presented as Z^m / col(relations).

Elements (GroupElement) are tuples of integers, one coordinate per invariant
factor, coordinate t reduced modulo d_t when d_t >= 1.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, lcm, prod

from abelian_core.int_matrix import IntMatrix
from abelian_core.snf import in_column_span, snf
from utilities.errors import DimensionError

GroupElement = tuple


@dataclass(frozen=True)
class FgAbGroup:
    """
    Z/d_1 ⊕ ... ⊕ Z/d_r with d_1 | d_2 | ... for the nonzero d's, no d equal
    to 1, and the zeros (infinite cyclic factors) last.

    >>> print(FgAbGroup((2, 4, 0)))
    C2 x C4 x Z
    """

    invariants: tuple = ()

    def __post_init__(self):
        inv = tuple(int(d) for d in self.invariants)
        object.__setattr__(self, "invariants", inv)
        if any(d < 0 for d in inv):
            raise ValueError(f"negative invariant factor in {inv}")
        if any(d == 1 for d in inv):
            raise ValueError(f"invariant factor 1 is not allowed: {inv}")
        torsion = [d for d in inv if d]
        if inv[:len(torsion)] != tuple(torsion):
            raise ValueError(f"zero invariant factors must come last: {inv}")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a divisibility chain: {inv}")

    @classmethod
    def from_factors(cls, factors):
        """Canonical form of Z/f_1 ⊕ ... ⊕ Z/f_k for arbitrary f_i >= 0."""
        factors = [abs(int(f)) for f in factors]
        return cokernel_invariants(IntMatrix.diagonal(factors))

    @classmethod
    def trivial(cls):
        return cls(())

    @classmethod
    def cyclic(cls, d):
        return cls(()) if d == 1 else cls((d,))

    # ------------------------------------------------------------------

    @property
    def rank(self):
        """Number of generators (length of the invariant list)."""
        return len(self.invariants)

    @property
    def free_rank(self):
        return sum(1 for d in self.invariants if d == 0)

    @property
    def torsion(self):
        return tuple(d for d in self.invariants if d)

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def is_trivial(self):
        return not self.invariants

    @property
    def order(self):
        """Cardinality, or None for an infinite group."""
        return prod(self.invariants) if self.is_finite else None

    @property
    def exponent(self):
        """Least common multiple of the torsion factors (0 if infinite, 1 if trivial)."""
        if not self.is_finite:
            return 0
        return lcm(*self.invariants) if self.invariants else 1

    def zero(self):
        return (0,) * self.rank

    def reduce(self, coeffs):
        if len(coeffs) != self.rank:
            raise DimensionError(f"{len(coeffs)} coordinates for a rank-{self.rank} group")
        return tuple(c % d if d else c for c, d in zip(coeffs, self.invariants))

    def add(self, x, y):
        return self.reduce([a + b for a, b in zip(x, y)])

    def sub(self, x, y):
        return self.reduce([a - b for a, b in zip(x, y)])

    def neg(self, x):
        return self.reduce([-a for a in x])

    def scale(self, k, x):
        return self.reduce([k * a for a in x])

    def element_order(self, x):
        x = self.reduce(x)
        if any(c and d == 0 for c, d in zip(x, self.invariants)):
            return 0
        return lcm(*(d // gcd(c, d) for c, d in zip(x, self.invariants) if d))

    def elements(self):
        """All elements in enumeration order (first coordinate most significant)."""
        if not self.is_finite:
            raise ValueError(f"cannot enumerate the infinite group {self}")
        return [tuple(e) for e in product(*(range(d) for d in self.invariants))]

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements())}

    def index_of(self, x):
        return self._index[self.reduce(x)]

    def direct_sum(self, other):
        return FgAbGroup.from_factors(self.invariants + other.invariants)

    def relation_matrix(self):
        """diag(d_1, ..., d_r); free factors give zero columns."""
        return IntMatrix.diagonal(self.invariants)

    def presentation(self):
        return PresentedGroup(self.rank, self.relation_matrix())

    def __str__(self):
        if not self.invariants:
            return "0"
        return " x ".join("Z" if d == 0 else f"C{d}" for d in self.invariants)


def cokernel_invariants(M):
    """
    Invariant factors of Z^rows / col(M): the SNF diagonal entries above 1,
    followed by (rows - rank) zeros.
    """
    result = snf(M, left=False, right=False)
    diagonal = result.diagonal
    torsion = tuple(d for d in diagonal if d > 1)
    return FgAbGroup(torsion + (0,) * (M.rows - result.rank))


@dataclass(frozen=True)
class PresentedGroup:
    """Z^ambient_rank / col(relations)."""

    ambient_rank: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.ambient_rank:
            raise DimensionError(
                f"relation matrix has {self.relations.rows} rows, ambient rank is {self.ambient_rank}"
            )

    @classmethod
    def free(cls, rank):
        return cls(rank, IntMatrix.zeros(rank, 0))

    def power(self, copies):
        """Direct sum of `copies` copies, relations block-diagonal."""
        return PresentedGroup(
            self.ambient_rank * copies,
            IntMatrix.block_diagonal([self.relations] * copies),
        )

    def contains(self, vector):
        """True when the vector is zero in the presented group."""
        return in_column_span(self.relations, vector)

    def canonical(self):
        return cokernel_invariants(self.relations)
