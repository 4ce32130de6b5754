"""
Exhaustive evaluation of tiny cochain complexes: enumerate every cochain,
filter cycles with the pointwise coboundary, map every lower cochain to get
the boundaries, and count cosets. Independent of the SNF pipeline.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import gcd, lcm

from complexes.coboundary import Cochain, coboundary
from utilities.config_utils import DEFAULT_ORACLE_LIMIT
from utilities.errors import OracleGuardError

logger = logging.getLogger(__name__)


def _moduli(data, degree):
    return data.B.invariants * data.size(degree)


def _add(x, y, moduli):
    return tuple((a + b) % m for a, b, m in zip(x, y, moduli))


def _scale(k, x, moduli):
    return tuple((k * a) % m for a, m in zip(x, moduli))


def cochain_count(data, degree, limit=DEFAULT_ORACLE_LIMIT):
    """|B|^N for the degree, checked against the enumeration guard."""
    B = data.B
    if not B.is_finite:
        raise OracleGuardError(f"cannot enumerate cochains with values in the infinite group {B}")
    count = B.order ** data.size(degree)
    if count > limit:
        raise OracleGuardError(f"degree {degree} has {count} cochains, guard is {limit}")
    return count


def enumerate_cochains(data, degree, limit=DEFAULT_ORACLE_LIMIT):
    """Every cochain of the degree exactly once, in mixed-radix order of the coefficients."""
    cochain_count(data, degree, limit)
    ranges = [range(m) for m in _moduli(data, degree)]
    for values in product(*ranges):
        yield Cochain(data, degree, values)


@dataclass(frozen=True)
class EnumeratedSubgroup:
    elements: frozenset
    moduli: tuple

    @property
    def cardinality(self):
        return len(self.elements)

    @property
    def exponent(self):
        orders = (_order(x, self.moduli) for x in self.elements)
        return lcm(1, *orders)

    @property
    def summary(self):
        return (self.cardinality, self.exponent)

    def spot_check(self, rng, samples=50):
        """Closure under addition and negation on sampled pairs."""
        pool = list(self.elements)
        for _ in range(min(samples, len(pool) ** 2)):
            x, y = rng.choice(pool), rng.choice(pool)
            if _add(x, y, self.moduli) not in self.elements:
                return False
            if _scale(-1, x, self.moduli) not in self.elements:
                return False
        return True


def _order(x, moduli):
    return lcm(1, *(m // gcd(a, m) for a, m in zip(x, moduli)))


@dataclass(frozen=True)
class BruteSummary:
    degree: int
    cycles: int       # |Z^n|
    cochains: int     # |C^n|
    boundaries: int   # |B^n|, the image of δ_{n-1}
    order: int        # |H^n|
    exponent: int

    def to_dict(self):
        return {
            "degree": self.degree,
            "cycles": self.cycles,
            "cochains": self.cochains,
            "boundaries": self.boundaries,
            "order": self.order,
            "exponent": self.exponent,
        }


def cycle_subgroup(data, n, limit=DEFAULT_ORACLE_LIMIT):
    moduli = _moduli(data, n)
    elements = frozenset(
        f.values for f in enumerate_cochains(data, n, limit) if coboundary(f).is_zero()
    )
    return EnumeratedSubgroup(elements, moduli)


def boundary_subgroup(data, n, limit=DEFAULT_ORACLE_LIMIT):
    moduli = _moduli(data, n)
    if n == 0:
        return EnumeratedSubgroup(frozenset([(0,) * len(moduli)]), moduli)
    elements = frozenset(
        coboundary(f).canonical().values for f in enumerate_cochains(data, n - 1, limit)
    )
    return EnumeratedSubgroup(elements, moduli)


def quotient_exponent(cycles, boundaries):
    """lcm over z of the least m >= 1 with m·z a boundary."""
    moduli = cycles.moduli
    exponent = 1
    for z in cycles.elements:
        m, x = 1, z
        while x not in boundaries.elements:
            m += 1
            x = _add(x, z, moduli)
        exponent = lcm(exponent, m)
    return exponent


def brute_cohomology_summary(data, n, limit=DEFAULT_ORACLE_LIMIT):
    """
    (|Z^n|, |C^n|, |H^n|, exponent of H^n) by exhaustive enumeration.

    Raises:
        OracleGuardError: B infinite, or more than limit cochains in degree n-1 or n
    """
    total = cochain_count(data, n, limit)
    cycles = cycle_subgroup(data, n, limit)
    boundaries = boundary_subgroup(data, n, limit)
    if not boundaries.elements <= cycles.elements:
        raise OracleGuardError(f"boundaries of degree {n} are not all cycles")
    summary = BruteSummary(
        degree=n,
        cycles=cycles.cardinality,
        cochains=total,
        boundaries=boundaries.cardinality,
        order=cycles.cardinality // boundaries.cardinality,
        exponent=quotient_exponent(cycles, boundaries),
    )
    logger.debug("oracle: %s", summary)
    return summary


def image_cardinality(data, n, limit=DEFAULT_ORACLE_LIMIT):
    """|δ_n(C^n)|, for the first-isomorphism check |Z^n|·|im δ_n| = |C^n|."""
    return len({coboundary(f).canonical().values for f in enumerate_cochains(data, n, limit)})
