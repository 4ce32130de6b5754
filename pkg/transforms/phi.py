"""
Comparison maps between triple complexes whose cocycles differ by a
coboundary, κ = κ' + δ₂u.

Φ_u(f)(g; a) = f(g; c) with c_{i,j} = a_{i,j} + u(g_{i+1}⋯g_j, g_{j+1}).
The ordered product g_{i+1}⋯g_j is never empty because i < j. It sends
cochains over κ to cochains over κ' and commutes with the coboundaries.
"""

from dataclasses import dataclass

from abelian_core.int_matrix import IntMatrix
from complexes.coboundary import (
    Cochain,
    assemble_delta,
    delta_function,
    delta_value,
    random_cochain_function,
)
from complexes.settings import Variant
from complexes.tuples import pair_list
from group_data.cocycles import Cochain2, coboundary2_classical
from utilities.checks import CheckResult
from utilities.config_utils import DEFAULT_CEILING
from utilities.errors import AxiomError, DimensionError


@dataclass(frozen=True)
class PhiContext:
    u: Cochain2
    kappa: object        # Cocycle3
    kappa_prime: object  # Cocycle3

    def __post_init__(self):
        if not (self.u.action == self.kappa.action == self.kappa_prime.action):
            raise DimensionError("u, κ and κ' must share the action on A")
        delta_u = coboundary2_classical(self.u)
        difference = self.kappa - self.kappa_prime
        if difference.values != delta_u.values:
            n = self.u.action.group.order
            t = next(t for t, (x, y) in enumerate(zip(difference.values, delta_u.values)) if x != y)
            witness = [t // (n * n), (t // n) % n, t % n]
            raise AxiomError("κ - κ' = δ₂u", witness, f"κ - κ' differs from δ₂u at {tuple(witness)}")

    @classmethod
    def from_u(cls, kappa, u):
        """The context (κ, κ - δ₂u)."""
        return cls(u, kappa, kappa - coboundary2_classical(u))

    def inverse(self):
        """Φ_{-u}: from κ' back to κ."""
        return PhiContext(-self.u, self.kappa_prime, self.kappa)


def u_digits(data, u):
    """u as a flat table of A-element indices."""
    return [data.a_digit(x) for x in u.values]


def shifted_pairs(data, table, g_digits, a_digits):
    """The pair part c of Φ_u at (g; a) on element indices; table from u_digits."""
    ops = data.ops
    n_g = data.G.order
    n = len(g_digits)
    out = []
    for (i, j), a in zip(pair_list(n), a_digits):
        p = ops.product(g_digits[i:j])
        out.append(ops.add(a, table[p * n_g + g_digits[j]]))
    return tuple(out)


def phi_function(data, u, fn):
    """Φ_u fn as a callable, fn being a callable on (g_digits, a_digits)."""
    table = u_digits(data, u)

    def shifted(g_digits, a_digits):
        return fn(g_digits, shifted_pairs(data, table, g_digits, a_digits))
    return shifted


def _check_triple(ctx, f):
    if f.data.variant is not Variant.TRIPLE:
        raise DimensionError(f"Φ_u acts on triple cochains, got {f.data.variant.value}")
    if f.data.kappa != ctx.kappa:
        raise DimensionError("cochain is not over the context's κ")


def target_data(ctx, data):
    return data.with_kappa(ctx.kappa_prime)


def phi_u(ctx, f):
    """Φ_u f as a Cochain over κ'."""
    _check_triple(ctx, f)
    return Cochain.from_function(target_data(ctx, f.data), f.degree, phi_function(f.data, ctx.u, f))


def phi_matrix(ctx, data, n):
    """
    Permutation matrix P_n with vec(Φ_u f) = P_n·vec(f) on degree-n coefficient
    vectors: row block τ has the identity in column block c(τ).
    """
    space = data.space(n)
    r = data.r
    table = u_digits(data, ctx.u)
    entries = []
    for t, (g_digits, a_digits) in enumerate(space.digits()):
        s = space.encode(g_digits, shifted_pairs(data, table, g_digits, a_digits))
        for p in range(r):
            entries.append((t * r + p, s * r + p, 1))
    size = space.size * r
    return IntMatrix.from_entries(size, size, entries)


def check_phi_commutes(ctx, data, n, rng, samples=100):
    """δ^{κ'}(Φ_u f) = Φ_u(δ^κ f) at sampled degree n+1 tuples, f random over κ."""
    f = random_cochain_function(data, rng)
    primed = target_data(ctx, data)
    lhs_fn = phi_function(data, ctx.u, f)
    rhs_fn = phi_function(data, ctx.u, delta_function(data, n, f))
    name = f"phi_commutes_with_delta_{n}"
    for g_digits, a_digits in data.space(n + 1).sample(rng, samples):
        if delta_value(primed, n, lhs_fn, g_digits, a_digits) != rhs_fn(g_digits, a_digits):
            return CheckResult(name, False, {"g": list(g_digits), "a": list(a_digits)})
    return CheckResult(name, True)


def check_phi_additive(data, u, v, n, rng, samples=100):
    """Φ_u Φ_v f = Φ_{u+v} f at sampled degree n tuples."""
    f = random_cochain_function(data, rng)
    composed = phi_function(data, u, phi_function(data, v, f))
    summed = phi_function(data, u + v, f)
    name = f"phi_additive_{n}"
    for g_digits, a_digits in data.space(n).sample(rng, samples):
        if composed(g_digits, a_digits) != summed(g_digits, a_digits):
            return CheckResult(name, False, {"g": list(g_digits), "a": list(a_digits)})
    return CheckResult(name, True)


def check_phi_matrix(ctx, data, n, ceiling=DEFAULT_CEILING):
    """D^{κ'}_n · P_n = P_{n+1} · D^κ_n as integer matrices."""
    primed = target_data(ctx, data)
    left = assemble_delta(primed, n, ceiling).matrix @ phi_matrix(ctx, data, n)
    right = phi_matrix(ctx, data, n + 1) @ assemble_delta(data, n, ceiling).matrix
    name = f"phi_matrix_intertwines_{n}"
    if left != right:
        i, j, _ = next(iter((left - right).items()))
        return CheckResult(name, False, {"row": i, "col": j})
    return CheckResult(name, True)
