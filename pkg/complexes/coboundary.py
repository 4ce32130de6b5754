"""
Cochains and the coboundary δ_n = Σ_k (-1)^k f∘d_n^k, pointwise and as a
lifted integer matrix on the free covers of the cochain groups.

A degree-n cochain with values in B = Z^r / diag(d) is a flat list of
N_n·r integers; the value at tuple index τ occupies positions τ·r .. τ·r+r-1.
"""

import logging
from dataclasses import dataclass

from abelian_core.fg_groups import PresentedGroup
from abelian_core.int_matrix import IntMatrix
from complexes.faces import face_digits, face_recipes
from complexes.tuples import TupleIndex
from group_data.cocycles import random_element
from utilities.checks import CheckResult
from utilities.config_utils import DEFAULT_CEILING
from utilities.errors import DimensionError, ScaleGuardError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cochain:
    data: object  # ComplexData
    degree: int
    values: tuple

    def __post_init__(self):
        expected = self.data.ambient_rank(self.degree)
        if len(self.values) != expected:
            raise DimensionError(f"cochain of degree {self.degree} needs {expected} coefficients, got {len(self.values)}")

    @classmethod
    def zero(cls, data, degree):
        return cls(data, degree, (0,) * data.ambient_rank(degree))

    @classmethod
    def from_function(cls, data, degree, fn):
        """Tabulate fn(g_digits, a_digits) -> element of B over the whole tuple space."""
        B = data.B
        values = []
        for g_digits, a_digits in data.space(degree).digits():
            values.extend(B.reduce(tuple(fn(g_digits, a_digits))))
        return cls(data, degree, tuple(values))

    @classmethod
    def random(cls, data, degree, rng, spread=3):
        B = data.B
        values = []
        for _ in range(data.size(degree)):
            values.extend(random_element(B, rng, spread))
        return cls(data, degree, tuple(values))

    def at(self, index):
        r = self.data.r
        return tuple(self.values[index * r:(index + 1) * r])

    def __call__(self, g_digits, a_digits):
        return self.at(self.data.space(self.degree).encode(g_digits, a_digits))

    def value(self, tau):
        """Value at a TupleIndex (group element indices, A-elements)."""
        return self(*self.data.to_digits(tau))

    def canonical(self):
        B = self.data.B
        r = self.data.r
        out = []
        for t in range(self.data.size(self.degree)):
            out.extend(B.reduce(self.values[t * r:(t + 1) * r]))
        return Cochain(self.data, self.degree, tuple(out))

    def is_zero(self):
        return not any(self.canonical().values)


def delta_value(data, n, fn, g_digits, a_digits):
    """
    (δ_n fn) at one degree n+1 tuple, fn being any callable
    (g_digits, a_digits) -> element of B.
    """
    B = data.B
    acc = B.zero()
    for k in range(n + 2):
        h, b = face_digits(data, n, k, g_digits, a_digits)
        value = fn(h, b)
        if k == 0 and data.variant.twisted:
            value = data.action_b.act(g_digits[0], value)
        acc = B.add(acc, value) if k % 2 == 0 else B.sub(acc, value)
    return acc


def delta_function(data, n, fn):
    """δ_n fn as a callable on degree n+1 tuples, without tabulating."""
    def delta(g_digits, a_digits):
        return delta_value(data, n, fn, g_digits, a_digits)
    return delta


def eval_delta(f, tau):
    """
    (δ f)(τ) for a Cochain f of degree n and a degree n+1 tuple τ, given as a
    TupleIndex or a tuple index.
    """
    data = f.data
    if isinstance(tau, TupleIndex):
        digits = data.to_digits(tau)
        data.space(f.degree + 1).encode(*digits)
    else:
        digits = data.space(f.degree + 1).decode(tau)
    return delta_value(data, f.degree, f, *digits)


def coboundary(f):
    """δ f tabulated as a Cochain of degree n+1."""
    return Cochain.from_function(f.data, f.degree + 1, delta_function(f.data, f.degree, f))


def presentation(data, n):
    """₂C^n as Z^{N_n r} / (block-diagonal copies of B's relations)."""
    return data.B.presentation().power(data.size(n))


def check_scale(data, n, ceiling):
    required = data.ambient_rank(n + 1)
    if ceiling is not None and required > ceiling:
        raise ScaleGuardError(required, ceiling, f"δ_{n} target (degree {n + 1})")
    return required


@dataclass(frozen=True)
class DeltaMatrix:
    degree: int
    matrix: IntMatrix
    source: PresentedGroup
    target: PresentedGroup


def assemble_delta(data, n, ceiling=DEFAULT_CEILING):
    """
    Lifted matrix of δ_n: rows index degree n+1 coefficients, columns degree n.

    The row block of target tuple τ gets (-1)^k times a block in the column
    block of d_n^k(τ): the identity, or B's action matrix of g_1(τ) for the
    twisted first face.

    Raises:
        ScaleGuardError: when N_{n+1}·r exceeds the ceiling
    """
    if n < 0:
        raise DimensionError(f"negative degree {n}")
    rows = check_scale(data, n, ceiling)
    cols = data.ambient_rank(n)
    r = data.r
    logger.debug("assembling δ_%d (%s): %d x %d", n, data.variant.value, rows, cols)

    source, target = presentation(data, n), presentation(data, n + 1)
    if r == 0:
        return DeltaMatrix(n, IntMatrix.zeros(rows, cols), source, target)

    blocks = [
        [(p, q, v) for p, q, v in data.action_b.matrix(g).items()]
        for g in data.G.elements()
    ]
    entries = []
    for t, (faces, twist) in enumerate(face_recipes(data, n)):
        row0 = t * r
        for k, s in enumerate(faces):
            sign = -1 if k % 2 else 1
            col0 = s * r
            if k == 0 and twist is not None:
                for p, q, v in blocks[twist]:
                    entries.append((row0 + p, col0 + q, sign * v))
            else:
                for p in range(r):
                    entries.append((row0 + p, col0 + p, sign))
    matrix = IntMatrix.from_entries(rows, cols, entries)
    return DeltaMatrix(n, matrix, source, target)


def random_cochain_function(data, rng, spread=3):
    """A random cochain drawn lazily: values are fixed the first time a tuple is asked for."""
    B = data.B
    drawn = {}

    def fn(g_digits, a_digits):
        key = (tuple(g_digits), tuple(a_digits))
        if key not in drawn:
            drawn[key] = random_element(B, rng, spread)
        return drawn[key]
    return fn


def check_delta_squared_pointwise(data, n, rng, samples=1000):
    """δ_{n+1}δ_n f = 0 at sampled degree n+2 tuples for a random f of degree n."""
    f = random_cochain_function(data, rng)
    delta_f = delta_function(data, n, f)
    zero = data.B.zero()
    name = f"delta_squared_pointwise_{n}"
    for g_digits, a_digits in data.space(n + 2).sample(rng, samples):
        if delta_value(data, n + 1, delta_f, g_digits, a_digits) != zero:
            return CheckResult(name, False, {"g": list(g_digits), "a": list(a_digits)})
    return CheckResult(name, True)


def check_matrix_agreement(data, n, rng, ceiling=DEFAULT_CEILING, matrix=None):
    """The assembled δ_n applied to a random coefficient vector equals pointwise δ_n."""
    if matrix is None:
        matrix = assemble_delta(data, n, ceiling).matrix
    f = Cochain.random(data, n, rng)
    lifted = Cochain(data, n + 1, tuple(matrix.apply(list(f.values)))).canonical()
    pointwise = coboundary(f)
    name = f"matrix_agrees_with_pointwise_{n}"
    if lifted.values != pointwise.values:
        t = next(t for t in range(data.size(n + 1)) if lifted.at(t) != pointwise.at(t))
        return CheckResult(name, False, {"tuple": t, "matrix": list(lifted.at(t)), "pointwise": list(pointwise.at(t))})
    return CheckResult(name, True)
