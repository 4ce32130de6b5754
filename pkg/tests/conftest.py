import random

import pytest

from abelian_core.fg_groups import FgAbGroup
from group_data.actions import action_from_rows, sign_action, trivial_action
from group_data.cocycles import Cocycle3, coboundary2_classical, random_cochain2
from group_data.finite_group import cyclic, direct_product, permutation_sign, symmetric


# ----------------------------------------------------------------------
# group zoo

@pytest.fixture
def z2():
    return cyclic(2)


@pytest.fixture
def z3():
    return cyclic(3)


@pytest.fixture
def z4():
    return cyclic(4)


@pytest.fixture
def klein():
    return direct_product(cyclic(2), cyclic(2))


@pytest.fixture
def s3():
    return symmetric(3)


# ----------------------------------------------------------------------
# modules

@pytest.fixture
def Z():
    return FgAbGroup((0,))


@pytest.fixture
def C2():
    return FgAbGroup((2,))


@pytest.fixture
def C3():
    return FgAbGroup((3,))


@pytest.fixture
def C4():
    return FgAbGroup((4,))


# ----------------------------------------------------------------------
# actions and cocycles

@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def z2_on_c2(z2, C2):
    return trivial_action(z2, C2)


@pytest.fixture
def z2_negation_on_Z(z2, Z):
    return action_from_rows(z2, Z, [[[1]], [[-1]]])


@pytest.fixture
def s3_sign_on_c3(s3, C3):
    return sign_action(s3, C3, permutation_sign(3))


@pytest.fixture
def z2_kappa(z2_on_c2):
    """The nonzero class of H^3(Z2, Z2): κ(g1, g2, g3) = g1·g2·g3."""
    return Cocycle3.from_values(
        z2_on_c2, [(g1 * g2 * g3,) for g1 in range(2) for g2 in range(2) for g3 in range(2)]
    )


@pytest.fixture
def z3_kappa(z3, C3):
    """κ(a, b, c) = a·⌊(b + c)/3⌋ for Z3 acting trivially on Z3."""
    action = trivial_action(z3, C3)
    return Cocycle3.from_values(
        action, [(a * ((b + c) // 3),) for a in range(3) for b in range(3) for c in range(3)]
    )


@pytest.fixture
def s3_kappa(s3_sign_on_c3):
    """δ₂ of a random u for the sign action of S3 on Z3."""
    u = random_cochain2(s3_sign_on_c3, random.Random(7))
    return coboundary2_classical(u)
