"""
The ternary associativity identity for f(a, b, c) = a·b·c⁻¹:

    f(f(a01, a02, a12), a03, a13) = f(a01, f(a02, a03, a23), f(a12, a13, a23))

It holds in every abelian group and fails in S3.
"""

import random
from itertools import product

from abelian_core.fg_groups import FgAbGroup
from group_data.finite_group import from_abelian
from utilities.checks import first_failure

SLOTS = ("a01", "a02", "a03", "a12", "a13", "a23")


def ternary(G, a, b, c):
    return G.mul(G.mul(a, b), G.inv(c))


def ternary_sides(G, a01, a02, a03, a12, a13, a23):
    left = ternary(G, ternary(G, a01, a02, a12), a03, a13)
    right = ternary(G, a01, ternary(G, a02, a03, a23), ternary(G, a12, a13, a23))
    return left, right


def _failures(G, tuples):
    for values in tuples:
        left, right = ternary_sides(G, *values)
        if left != right:
            witness = dict(zip(SLOTS, values))
            witness.update(left=left, right=right)
            yield witness


def ternary_check(group, samples=None, seed=0):
    """
    Check the identity exhaustively (samples=None) or on random 6-tuples.

    Args:
        group: a FiniteGroup, or a finite FgAbGroup (converted to its table)
        samples (int): number of random tuples, None for all |G|^6
        seed (int): random seed for sampling

    Returns:
        CheckResult: witness maps slot names to element indices
    """
    G = from_abelian(group) if isinstance(group, FgAbGroup) else group
    n = G.order
    if samples is None:
        tuples = product(range(n), repeat=6)
    else:
        rng = random.Random(seed)
        tuples = (tuple(rng.randrange(n) for _ in range(6)) for _ in range(samples))
    return first_failure("ternary_associativity", _failures(G, tuples))
