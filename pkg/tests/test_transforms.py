import random

import pytest

from abelian_core.fg_groups import FgAbGroup
from complexes.coboundary import Cochain
from complexes.cohomology import cohomology
from complexes.settings import ComplexData
from group_data.actions import sign_action, trivial_action
from group_data.cocycles import Cochain2, Cocycle3, coboundary2_classical, random_cochain2, verify_cocycle3
from group_data.finite_group import cyclic, direct_product, symmetric
from transforms.chain_maps import (
    check_iota_chain_map,
    check_rho_chain_map,
    exactness_record,
    iota,
    rho,
)
from transforms.phi import (
    PhiContext,
    check_phi_additive,
    check_phi_commutes,
    check_phi_matrix,
    phi_u,
)
from transforms.ternary import ternary_check, ternary_sides
from utilities.errors import AxiomError, DimensionError


@pytest.fixture
def z2_triple(z2_on_c2, z2_kappa):
    return ComplexData.triple(z2_on_c2, z2_on_c2, z2_kappa)


@pytest.fixture
def z3_triple(z3_kappa):
    action = z3_kappa.action
    return ComplexData.triple(action, action, z3_kappa)


@pytest.fixture
def s3_triple(s3, s3_sign_on_c3, s3_kappa):
    B = sign_action(s3, FgAbGroup((0,)), [1, -1, -1, 1, 1, -1])
    return ComplexData.triple(s3_sign_on_c3, B, s3_kappa)


# ----------------------------------------------------------------------
# Φ_u

def test_zero_u_is_the_identity(z2_triple, rng):
    ctx = PhiContext.from_u(z2_triple.kappa, Cochain2.zero(z2_triple.action_a))
    for n in (1, 2, 3):
        f = Cochain.random(z2_triple, n, rng)
        assert phi_u(ctx, f).values == f.values


def test_context_rejects_wrong_difference(z2_triple):
    action = z2_triple.action_a
    u = Cochain2.from_values(action, [(0,), (1,), (0,), (0,)])
    with pytest.raises(AxiomError) as e:
        PhiContext(u, z2_triple.kappa, z2_triple.kappa)
    assert len(e.value.witness) == 3


def test_phi_inverse(z2_triple, rng):
    u = random_cochain2(z2_triple.action_a, rng)
    ctx = PhiContext.from_u(z2_triple.kappa, u)
    f = Cochain.random(z2_triple, 3, rng)
    there = phi_u(ctx, f)
    assert there.data.kappa == ctx.kappa_prime
    back = phi_u(ctx.inverse(), there)
    assert back.values == f.values


def test_phi_needs_matching_kappa(z2_triple, rng):
    u = Cochain2.from_values(z2_triple.action_a, [(0,), (1,), (1,), (0,)])
    ctx = PhiContext.from_u(z2_triple.kappa, u)
    other = z2_triple.with_kappa(ctx.kappa_prime)
    with pytest.raises(DimensionError):
        phi_u(ctx, Cochain.random(other, 2, rng))


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n", [2, 3])
def test_phi_identities_z2(z2_triple, seed, n):
    rng = random.Random(seed)
    u = random_cochain2(z2_triple.action_a, rng)
    v = random_cochain2(z2_triple.action_a, rng)
    ctx = PhiContext.from_u(z2_triple.kappa, u)
    assert check_phi_commutes(ctx, z2_triple, n, rng, samples=100)
    assert check_phi_additive(z2_triple, u, v, n, rng, samples=100)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n", [2, 3])
def test_phi_identities_z3(z3_triple, seed, n):
    rng = random.Random(seed)
    u = random_cochain2(z3_triple.action_a, rng)
    v = random_cochain2(z3_triple.action_a, rng)
    ctx = PhiContext.from_u(z3_triple.kappa, u)
    assert check_phi_commutes(ctx, z3_triple, n, rng, samples=100)
    assert check_phi_additive(z3_triple, u, v, n, rng, samples=100)


def test_phi_identities_s3(s3_triple, rng):
    u = random_cochain2(s3_triple.action_a, rng)
    ctx = PhiContext.from_u(s3_triple.kappa, u)
    for n in (1, 2, 3):
        assert check_phi_commutes(ctx, s3_triple, n, rng, samples=200)


@pytest.mark.parametrize("n", [1, 2])
def test_phi_matrix_intertwines(z2_triple, rng, n):
    ctx = PhiContext.from_u(z2_triple.kappa, random_cochain2(z2_triple.action_a, rng))
    assert check_phi_matrix(ctx, z2_triple, n)


@pytest.mark.parametrize("seed", range(10))
def test_cohomology_depends_only_on_the_class_z2(z2_triple, seed):
    u = random_cochain2(z2_triple.action_a, random.Random(seed))
    primed = z2_triple.with_kappa(z2_triple.kappa - coboundary2_classical(u))
    for n in (2, 3):
        assert cohomology(z2_triple, n).group == cohomology(primed, n).group


@pytest.mark.parametrize("seed", range(10))
def test_cohomology_depends_only_on_the_class_z3(z3_triple, seed):
    u = random_cochain2(z3_triple.action_a, random.Random(seed))
    primed = z3_triple.with_kappa(z3_triple.kappa - coboundary2_classical(u))
    assert cohomology(z3_triple, 2).group == cohomology(primed, 2).group
    if seed == 0:
        assert cohomology(z3_triple, 3).group == cohomology(primed, 3).group


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(1, 10))
def test_cohomology_depends_only_on_the_class_z3_degree_three(z3_triple, seed):
    u = random_cochain2(z3_triple.action_a, random.Random(seed))
    primed = z3_triple.with_kappa(z3_triple.kappa - coboundary2_classical(u))
    assert cohomology(z3_triple, 3).group == cohomology(primed, 3).group


# ----------------------------------------------------------------------
# ι and ρ

def _zoo(z2_triple, z3_triple, s3_triple):
    z2 = z2_triple.G
    plain_z = ComplexData.triple(z2_triple.action_a, trivial_action(z2, FgAbGroup((0,))), z2_triple.kappa)
    return [z2_triple, z3_triple, s3_triple, plain_z]


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_iota_and_rho_are_chain_maps(z2_triple, z3_triple, s3_triple, n):
    for data in _zoo(z2_triple, z3_triple, s3_triple):
        rng = random.Random(n)
        assert check_iota_chain_map(data, n, rng, samples=200)
        assert check_rho_chain_map(data, n, rng, samples=200)


def test_iota_of_zero_and_injectivity(z2_triple, rng):
    classical = ComplexData.classical(z2_triple.action_b)
    assert iota(Cochain.zero(classical, 2), z2_triple).is_zero()
    f = Cochain(classical, 2, (0, 1, 0, 0))
    g = Cochain.zero(classical, 2)
    assert iota(f, z2_triple).values != iota(g, z2_triple).values
    assert rho(Cochain.zero(z2_triple, 2)).is_zero()


def test_rho_of_iota_is_constant(z2_triple, rng):
    classical = ComplexData.classical(z2_triple.action_b)
    for n in (1, 2, 3):
        f = Cochain.random(classical, n, rng)
        restricted = rho(iota(f, z2_triple))
        for t in range(restricted.data.size(n)):
            assert restricted.at(t) == f.at(0)


def test_iota_rejects_other_variants(z2_triple, rng):
    with pytest.raises(DimensionError):
        iota(Cochain.random(z2_triple, 1, rng), z2_triple)


def test_exactness_record(z2_triple):
    record = exactness_record(z2_triple, 2)
    assert record["name"] == "exactness_2"
    assert record["rho_iota_zero"] is False
    assert record["ker_rho_equals_im_iota"] is False

    skipped = exactness_record(z2_triple, 3, limit=8)
    assert "skipped" in skipped


# ----------------------------------------------------------------------
# ternary identity

@pytest.mark.parametrize("group", [
    cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6),
    direct_product(cyclic(2), cyclic(2)),
])
def test_ternary_identity_on_small_abelian_groups(group):
    assert ternary_check(group)


def test_ternary_identity_on_fg_groups():
    assert ternary_check(FgAbGroup((2, 2)))
    assert ternary_check(FgAbGroup((6,)), samples=500, seed=3)


def test_ternary_identity_fails_in_s3():
    G = symmetric(3)
    result = ternary_check(G)
    assert not result
    witness = result.witness
    left, right = ternary_sides(G, *(witness[slot] for slot in ("a01", "a02", "a03", "a12", "a13", "a23")))
    assert left != right
    assert (left, right) == (witness["left"], witness["right"])


def test_cocycle_zoo_is_valid(z2_kappa, z3_kappa, s3_kappa):
    for kappa in (z2_kappa, z3_kappa, s3_kappa):
        assert verify_cocycle3(kappa)
    assert Cocycle3.zero(z2_kappa.action) != z2_kappa
