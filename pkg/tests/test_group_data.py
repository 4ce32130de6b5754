import random

import pytest

from abelian_core.fg_groups import FgAbGroup
from group_data.actions import action_from_rows, sign_action, trivial_action, validate_action
from group_data.cocycles import (
    Cochain2,
    Cocycle3,
    coboundary2_classical,
    random_cochain2,
    validate_cocycle3,
    verify_cocycle3,
)
from group_data.finite_group import (
    cyclic,
    direct_product,
    from_abelian,
    permutation_sign,
    symmetric,
    validate_group,
)
from utilities.errors import AxiomError, DimensionError


# ----------------------------------------------------------------------
# groups

def test_validate_z2_table():
    G = validate_group([[0, 1], [1, 0]])
    assert G.identity == 0
    assert G.order == 2
    assert G.inv(1) == 1


def test_symmetric_group(s3):
    assert s3.order == 6
    assert not s3.is_abelian
    assert s3.identity == 0
    for x in s3.elements():
        assert s3.mul(x, s3.inv(x)) == s3.identity
    assert permutation_sign(3) == [1, -1, -1, 1, 1, -1]


def test_rejects_non_latin_square():
    with pytest.raises(AxiomError) as e:
        validate_group([[0, 1], [1, 1]])
    assert e.value.axiom == "latin square"


def test_rejects_non_associative_table():
    # x·y = -x - y mod 3 is a latin square but not associative
    with pytest.raises(AxiomError) as e:
        validate_group([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
    assert e.value.axiom == "associativity"
    assert e.value.witness == [0, 0, 1]


def test_rejects_out_of_range_entry():
    with pytest.raises(AxiomError) as e:
        validate_group([[0, 5], [1, 0]])
    assert e.value.axiom == "closure"
    assert e.value.witness == [0, 1]


def test_rejects_wrong_declared_identity():
    with pytest.raises(AxiomError) as e:
        validate_group([[0, 1], [1, 0]], identity=1)
    assert e.value.axiom == "identity"


def test_products_and_constructors(z2, klein):
    assert klein.order == 4
    assert klein.is_abelian
    assert all(klein.mul(x, x) == klein.identity for x in klein.elements())
    assert z2.product([]) == z2.identity
    assert cyclic(5).product([1, 2, 3]) == 1

    V = from_abelian(FgAbGroup((2, 2)))
    assert V.order == 4
    assert V.is_abelian
    assert direct_product(z2, cyclic(3)).order == 6


# ----------------------------------------------------------------------
# actions

def test_trivial_action_is_valid(s3):
    M = FgAbGroup((2, 0))
    action = validate_action(trivial_action(s3, M))
    assert action.act(4, (1, -3)) == (1, -3)


def test_negation_on_integers(z2_negation_on_Z):
    assert z2_negation_on_Z.act(1, (5,)) == (-5,)
    assert z2_negation_on_Z.act(0, (5,)) == (5,)


def test_multiplication_by_two_is_not_an_automorphism(z2, C4):
    with pytest.raises(AxiomError) as e:
        action_from_rows(z2, C4, [[[1]], [[2]]])
    assert e.value.axiom == "automorphism"
    assert e.value.witness == [1]


def test_action_must_be_a_homomorphism(z3, Z):
    with pytest.raises(AxiomError) as e:
        action_from_rows(z3, Z, [[[1]], [[-1]], [[-1]]])
    assert e.value.axiom == "homomorphism"
    assert e.value.witness == [1, 1]


def test_identity_must_act_trivially(z2, Z):
    with pytest.raises(AxiomError) as e:
        action_from_rows(z2, Z, [[[-1]], [[-1]]])
    assert e.value.axiom == "identity"


def test_action_shapes(z2, C2):
    with pytest.raises(DimensionError):
        action_from_rows(z2, C2, [[[1]]])
    with pytest.raises(DimensionError):
        action_from_rows(z2, C2, [[[1]], [[1, 0]]])


def test_sign_action_of_s3(s3_sign_on_c3):
    assert s3_sign_on_c3.act(1, (1,)) == (2,)
    assert s3_sign_on_c3.act(3, (1,)) == (1,)


# ----------------------------------------------------------------------
# cocycles

def test_coboundary_of_zero(z2_on_c2):
    assert coboundary2_classical(Cochain2.zero(z2_on_c2)) == Cocycle3.zero(z2_on_c2)


def test_coboundary_of_product_cochain(z2_on_c2):
    u = Cochain2.from_values(z2_on_c2, [(g * h,) for g in range(2) for h in range(2)])
    assert coboundary2_classical(u).value(1, 1, 1) == (0,)


def _action_zoo():
    z2, z4, klein, s3 = cyclic(2), cyclic(4), direct_product(cyclic(2), cyclic(2)), symmetric(3)
    return [
        trivial_action(z2, FgAbGroup((2,))),
        action_from_rows(z2, FgAbGroup((0,)), [[[1]], [[-1]]]),
        trivial_action(cyclic(3), FgAbGroup((3,))),
        sign_action(z4, FgAbGroup((4,)), [1, -1, 1, -1]),
        sign_action(klein, FgAbGroup((0,)), [1, -1, 1, -1]),
        action_from_rows(klein, FgAbGroup((2, 2)), [[[1, 0], [0, 1]], [[0, 1], [1, 0]]] * 2),
        sign_action(s3, FgAbGroup((3,)), permutation_sign(3)),
    ]


@pytest.mark.parametrize("index", range(7))
@pytest.mark.parametrize("seed", range(3))
def test_coboundaries_are_cocycles(index, seed):
    u = random_cochain2(_action_zoo()[index], random.Random(seed))
    kappa = coboundary2_classical(u)
    assert verify_cocycle3(kappa)
    assert validate_cocycle3(kappa) is kappa


@pytest.mark.parametrize("index", range(7))
def test_reducing_then_acting_equals_acting_then_reducing(index):
    action = _action_zoo()[index]
    M = action.module
    rng = random.Random(index)
    for _ in range(20):
        x = [rng.randint(-20, 20) for _ in range(M.rank)]
        for g in action.group.elements():
            assert action.act(g, x) == action.act(g, M.reduce(x))


def test_known_cocycles(z2_kappa, z3_kappa, z2_on_c2):
    assert verify_cocycle3(Cocycle3.zero(z2_on_c2))
    assert verify_cocycle3(z2_kappa)
    assert verify_cocycle3(z3_kappa)


def test_perturbed_cocycle_is_rejected(z2_on_c2):
    values = [(0,)] * 8
    values[3] = (1,)  # κ(0, 1, 1) = 1 only
    kappa = Cocycle3.from_values(z2_on_c2, values)
    result = verify_cocycle3(kappa)
    assert not result
    assert len(result.witness) == 4
    with pytest.raises(AxiomError) as e:
        validate_cocycle3(kappa)
    assert e.value.axiom == "3-cocycle condition"


def test_table_length_is_checked(z2_on_c2):
    with pytest.raises(DimensionError):
        Cocycle3.from_values(z2_on_c2, [(0,)] * 7)
    with pytest.raises(DimensionError):
        Cochain2.from_values(z2_on_c2, [(0,)] * 3)


def test_cochain_arithmetic(z2, C3):
    action = trivial_action(z2, C3)
    u = Cochain2.from_values(action, [(1,), (2,), (0,), (4,)])
    assert u.value(1, 1) == (1,)
    assert (u + (-u)) == Cochain2.zero(action)
    kappa = coboundary2_classical(u)
    assert (kappa - kappa) == Cocycle3.zero(action)


def test_sign_action_needs_a_homomorphism(z3, C3):
    with pytest.raises(AxiomError):
        sign_action(z3, C3, [1, -1, -1])
