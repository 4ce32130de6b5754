#!/usr/bin/env python3
"""
Run a validated problem in one of its modes and build the result document.
"""

import logging
import random

from complexes.coboundary import check_delta_squared_pointwise, check_matrix_agreement, delta_value
from complexes.cohomology import cohomology, complex_slice
from complexes.faces import check_simplicial_identity, face_recipes
from complexes.settings import Variant
from group_data.cocycles import random_cochain2
from oracle.brute_force import brute_cohomology_summary
from transforms.chain_maps import check_iota_chain_map, check_rho_chain_map, exactness_record
from transforms.phi import PhiContext, check_phi_additive, check_phi_commutes, check_phi_matrix
from transforms.ternary import ternary_check
from utilities.checks import CheckResult
from utilities.config_utils import Settings
from utilities.errors import ScaleGuardError

logger = logging.getLogger(__name__)

# Largest |A| for which the ternary identity is checked on all 6-tuples
TERNARY_EXHAUSTIVE_ORDER = 6

# Largest ambient rank for which exactness of ι, ρ is examined
EXACTNESS_LIMIT = 512


def _result(spec, **sections):
    """input_hash, results and checks, plus the variant, mode and observations extensions."""
    document = {"input_hash": spec.input_hash, "variant": spec.variant.value, "mode": spec.mode,
                "results": [], "checks": [], "observations": []}
    document.update(sections)
    return document


def run_cohomology(spec, settings):
    return [cohomology(spec.data, n, settings.ceiling).to_dict() for n in spec.degrees]


def _matrix_checks(data, n, settings, rng, observations):
    try:
        piece = complex_slice(data, n, settings.ceiling)
    except ScaleGuardError as e:
        observations.append({"name": f"matrix_checks_{n}", "skipped": str(e)})
        return []
    return [
        piece.check(),
        check_matrix_agreement(data, n, rng, settings.ceiling, matrix=piece.D_cur),
    ]


def _phi_checks(spec, n, settings, rng, observations):
    data = spec.data
    ctx = PhiContext.from_u(data.kappa, spec.u)
    checks = [check_phi_commutes(ctx, data, n, rng, settings.samples)]
    v = random_cochain2(data.action_a, rng)
    checks.append(check_phi_additive(data, spec.u, v, n, rng, settings.samples))
    try:
        checks.append(check_phi_matrix(ctx, data, n, settings.ceiling))
        primed = data.with_kappa(ctx.kappa_prime)
        before = cohomology(data, n, settings.ceiling).group
        after = cohomology(primed, n, settings.ceiling).group
        checks.append(CheckResult(
            f"cohomology_depends_on_class_{n}", before == after,
            None if before == after else {"kappa": str(before), "kappa_prime": str(after)},
        ))
    except ScaleGuardError as e:
        observations.append({"name": f"phi_matrix_{n}", "skipped": str(e)})
    return checks


def _r_check(spec, settings, rng):
    """Whether the supplied degree-4 cochain R is a cocycle, on sampled degree-5 tuples."""
    data = spec.data
    zero = data.B.zero()
    for g_digits, a_digits in data.space(5).sample(rng, settings.samples):
        if delta_value(data, 4, spec.R, g_digits, a_digits) != zero:
            return CheckResult("R_cocycle", False, {"g": list(g_digits), "a": list(a_digits)})
    return CheckResult("R_cocycle", True)


def run_verify(spec, settings):
    """
    Returns:
        tuple: (checks, observations); checks are CheckResults
    """
    data = spec.data
    rng = random.Random(settings.seed)
    checks, observations = [], []

    for n in spec.degrees:
        checks.extend(_matrix_checks(data, n, settings, rng, observations))
        checks.append(check_delta_squared_pointwise(data, n, rng, settings.samples))
        if data.variant is Variant.ABELIAN and n >= 1:
            checks.append(check_simplicial_identity(n))
        if data.variant is Variant.TRIPLE:
            checks.append(check_iota_chain_map(data, n, rng, settings.samples))
            checks.append(check_rho_chain_map(data, n, rng, settings.samples))
            observations.append(exactness_record(data, n, EXACTNESS_LIMIT))
            if spec.u is not None:
                checks.extend(_phi_checks(spec, n, settings, rng, observations))

    if data.variant.has_pair_part and not data.A.is_trivial:
        exhaustive = data.A.order <= TERNARY_EXHAUSTIVE_ORDER
        checks.append(ternary_check(data.A, None if exhaustive else settings.samples, settings.seed))
    if spec.R is not None:
        checks.append(_r_check(spec, settings, rng))
    return checks, observations


def _group_shadow(group):
    return {"order": group.order, "exponent": group.exponent}


def run_oracle(spec, settings):
    """Pipeline results, brute summaries and one agreement check per degree."""
    results, checks, summaries = [], [], []
    for n in spec.degrees:
        record = cohomology(spec.data, n, settings.ceiling)
        brute = brute_cohomology_summary(spec.data, n, settings.oracle_limit)
        results.append(record.to_dict())
        summaries.append(brute.to_dict())
        pipeline = _group_shadow(record.group)
        oracle = {"order": brute.order, "exponent": brute.exponent}
        agree = pipeline == oracle
        checks.append(CheckResult(f"oracle_agreement_{n}", agree,
                                  None if agree else {"pipeline": pipeline, "oracle": oracle}))
    return results, checks, summaries


def dump_faces(spec, settings):
    """Explicit face tables: for each degree n, every degree n+1 tuple and its faces."""
    data = spec.data
    tables = []
    for n in spec.degrees:
        target = data.space(n + 1)
        if target.size > settings.ceiling:
            raise ScaleGuardError(target.size, settings.ceiling, f"face table of degree {n}")
        rows = []
        for t, ((faces, twist), (g_digits, a_digits)) in enumerate(zip(face_recipes(data, n), target.digits())):
            rows.append({
                "target": t,
                "g": list(g_digits),
                "a": [list(data.a_element(d)) for d in a_digits],
                "faces": [
                    {"k": k, "source": s, "twist": twist if k == 0 else None}
                    for k, s in enumerate(faces)
                ],
            })
        tables.append({"degree": n, "source_size": data.size(n), "target_size": target.size, "rows": rows})
    return tables


def run(spec, settings=None):
    """
    Args:
        spec (ProblemSpec): validated problem
        settings (Settings): ceiling, samples, seed and oracle guard

    Returns:
        dict: the result document
    """
    settings = settings or Settings()
    logger.info("running %s on a %s problem, degrees %s", spec.mode, spec.variant.value, list(spec.degrees))
    if spec.mode == "cohomology":
        return _result(spec, results=run_cohomology(spec, settings))
    if spec.mode == "verify":
        checks, observations = run_verify(spec, settings)
        return _result(spec, checks=[c.to_dict() for c in checks], observations=observations)
    if spec.mode == "oracle":
        results, checks, summaries = run_oracle(spec, settings)
        return _result(spec, results=results, checks=[c.to_dict() for c in checks], oracle=summaries)
    if spec.mode == "faces-dump":
        return _result(spec, faces=dump_faces(spec, settings))
    raise ValueError(f"unknown mode {spec.mode!r}")


def all_passed(document):
    return all(check["pass"] for check in document.get("checks", []))
