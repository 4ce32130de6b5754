"""
The maps relating the three complexes over (G, A, κ; B):

    ι: C^n(G, B) -> ₂C^n(G, A, κ; B),   ι(f)(g; a) = f(g)
    ρ: ₂C^n(G, A, κ; B) -> ₂C^n(A, B),   ρ(F)(a) = F(e, ..., e; a)

Both commute with the coboundaries. ρ∘ι is not zero in general, so whether
they form a short exact sequence is only recorded per instance.
"""

import logging

from abelian_core.homology import cycle_generators
from abelian_core.int_matrix import IntMatrix
from abelian_core.snf import solve_many
from complexes.coboundary import Cochain, delta_value, presentation
from complexes.settings import ComplexData, Variant
from utilities.checks import CheckResult
from utilities.errors import DimensionError

logger = logging.getLogger(__name__)


def classical_data(data):
    return ComplexData.classical(data.action_b)


def abelian_data(data):
    return ComplexData.abelian(data.A, data.B)


def _require(variant, data):
    if data.variant is not variant:
        raise DimensionError(f"expected a {variant.value} cochain, got {data.variant.value}")


def iota_function(f):
    def lifted(g_digits, a_digits):
        return f(g_digits, ())
    return lifted


def rho_function(F):
    e = F.data.G.identity
    n = F.degree

    def restricted(g_digits, a_digits):
        return F((e,) * n, a_digits)
    return restricted


def iota(f, data):
    """ι(f) over the triple data; f is a classical cochain over the same G and B."""
    _require(Variant.CLASSICAL, f.data)
    _require(Variant.TRIPLE, data)
    if f.data.action_b != data.action_b:
        raise DimensionError("f and the triple disagree on the module B")
    return Cochain.from_function(data, f.degree, iota_function(f))


def rho(F):
    """ρ(F) over ₂C(A, B)."""
    _require(Variant.TRIPLE, F.data)
    return Cochain.from_function(abelian_data(F.data), F.degree, rho_function(F))


def check_iota_chain_map(data, n, rng, samples=200):
    """δ^κ(ι f) = ι(δ f) at sampled degree n+1 tuples, for a random f."""
    classical = classical_data(data)
    f = Cochain.random(classical, n, rng)
    lifted = iota_function(f)
    B = data.B
    for g_digits, a_digits in data.space(n + 1).sample(rng, samples):
        lhs = delta_value(data, n, lifted, g_digits, a_digits)
        rhs = delta_value(classical, n, f, g_digits, ())
        if lhs != B.reduce(rhs):
            return CheckResult(f"iota_chain_map_{n}", False, {"g": list(g_digits), "a": list(a_digits)})
    return CheckResult(f"iota_chain_map_{n}", True)


def check_rho_chain_map(data, n, rng, samples=200):
    """δ(ρ F) = ρ(δ^κ F) at sampled degree n+1 pair parts, for a random F."""
    plain = abelian_data(data)
    F = Cochain.random(data, n, rng)
    restricted = rho_function(F)
    e = data.G.identity
    for _, a_digits in plain.space(n + 1).sample(rng, samples):
        lhs = delta_value(plain, n, restricted, (), a_digits)
        rhs = delta_value(data, n, F, (e,) * (n + 1), a_digits)
        if lhs != rhs:
            return CheckResult(f"rho_chain_map_{n}", False, {"a": list(a_digits)})
    return CheckResult(f"rho_chain_map_{n}", True)


def iota_matrix(data, n):
    """Lift of ι on coefficient vectors: triple rows, classical columns."""
    classical = classical_data(data)
    source, target = classical.space(n), data.space(n)
    r = data.r
    entries = []
    for t, (g_digits, _) in enumerate(target.digits()):
        s = source.encode(g_digits, ())
        entries.extend((t * r + p, s * r + p, 1) for p in range(r))
    return IntMatrix.from_entries(target.size * r, source.size * r, entries)


def rho_matrix(data, n):
    """Lift of ρ on coefficient vectors: abelian rows, triple columns."""
    plain = abelian_data(data)
    source, target = data.space(n), plain.space(n)
    e = data.G.identity
    r = data.r
    entries = []
    for t, (_, a_digits) in enumerate(target.digits()):
        s = source.encode((e,) * n, a_digits)
        entries.extend((t * r + p, s * r + p, 1) for p in range(r))
    return IntMatrix.from_entries(target.size * r, source.size * r, entries)


def exactness_record(data, n, limit=512):
    """
    Whether ρ∘ι = 0 and ker ρ = im ι on degree-n cochains.

    Returns:
        dict: observation for the result document; never a pass/fail check
    """
    _require(Variant.TRIPLE, data)
    rank = data.ambient_rank(n)
    record = {"name": f"exactness_{n}", "degree": n}
    if rank > limit:
        record["skipped"] = f"ambient rank {rank} above {limit}"
        return record

    I = iota_matrix(data, n)
    R = rho_matrix(data, n)
    plain = presentation(abelian_data(data), n)
    triple = presentation(data, n)

    composite = R @ I
    moduli = plain.relations.monomial_moduli()
    rho_iota_zero = all(moduli[i] and v % moduli[i] == 0 for i, _, v in composite.items())

    kernel = cycle_generators(R, plain.relations)
    image = IntMatrix.hstack(I, triple.relations)
    kernel_in_image = all(x is not None for x in solve_many(image, kernel.columns()))

    record["rho_iota_zero"] = rho_iota_zero
    record["ker_rho_equals_im_iota"] = rho_iota_zero and kernel_in_image
    logger.debug("exactness at degree %d: %s", n, record)
    return record
