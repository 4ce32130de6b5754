"""
Classical cochains on G with values in a G-module A: 2-cochains u, 3-cocycles
κ, the coboundary δ₂ and the 3-cocycle condition, all written additively.

Tables are dense and flat, indexed g-major: (g1, g2) -> g1·n + g2 and
(g1, g2, g3) -> (g1·n + g2)·n + g3 with n = |G|.
"""

from dataclasses import dataclass
from itertools import product

from utilities.checks import first_failure
from utilities.errors import AxiomError, DimensionError


def _canonical_table(action, values, arity):
    G, A = action.group, action.module
    expected = G.order ** arity
    values = list(values)
    if len(values) != expected:
        raise DimensionError(f"{len(values)} values, expected |G|^{arity} = {expected}")
    return tuple(A.reduce(tuple(v)) for v in values)


@dataclass(frozen=True)
class Cochain2:
    action: object  # GAction on A
    values: tuple

    @classmethod
    def from_values(cls, action, values):
        return cls(action, _canonical_table(action, values, 2))

    @classmethod
    def zero(cls, action):
        return cls(action, (action.module.zero(),) * action.group.order ** 2)

    def value(self, g1, g2):
        return self.values[g1 * self.action.group.order + g2]

    def __add__(self, other):
        A = self.action.module
        return Cochain2(self.action, tuple(A.add(x, y) for x, y in zip(self.values, other.values)))

    def __neg__(self):
        A = self.action.module
        return Cochain2(self.action, tuple(A.neg(x) for x in self.values))


@dataclass(frozen=True)
class Cocycle3:
    action: object  # GAction on A
    values: tuple

    @classmethod
    def from_values(cls, action, values):
        return cls(action, _canonical_table(action, values, 3))

    @classmethod
    def zero(cls, action):
        return cls(action, (action.module.zero(),) * action.group.order ** 3)

    def value(self, g1, g2, g3):
        n = self.action.group.order
        return self.values[(g1 * n + g2) * n + g3]

    def __add__(self, other):
        A = self.action.module
        return Cocycle3(self.action, tuple(A.add(x, y) for x, y in zip(self.values, other.values)))

    def __sub__(self, other):
        A = self.action.module
        return Cocycle3(self.action, tuple(A.sub(x, y) for x, y in zip(self.values, other.values)))


def coboundary2_classical(u):
    """
    (δ₂u)(g1, g2, g3) = g1·u(g2, g3) − u(g1g2, g3) + u(g1, g2g3) − u(g1, g2).

    Returns:
        Cocycle3: the coboundary, always a 3-cocycle
    """
    action = u.action
    G, A = action.group, action.module
    values = []
    for g1, g2, g3 in product(G.elements(), repeat=3):
        x = action.act(g1, u.value(g2, g3))
        x = A.sub(x, u.value(G.mul(g1, g2), g3))
        x = A.add(x, u.value(g1, G.mul(g2, g3)))
        x = A.sub(x, u.value(g1, g2))
        values.append(x)
    return Cocycle3(action, tuple(values))


def cocycle3_defect(kappa, g1, g2, g3, g4):
    """Left side of the 3-cocycle condition at (g1, g2, g3, g4)."""
    action = kappa.action
    G, A = action.group, action.module
    x = action.act(g1, kappa.value(g2, g3, g4))
    x = A.sub(x, kappa.value(G.mul(g1, g2), g3, g4))
    x = A.add(x, kappa.value(g1, G.mul(g2, g3), g4))
    x = A.sub(x, kappa.value(g1, g2, G.mul(g3, g4)))
    return A.add(x, kappa.value(g1, g2, g3))


def _cocycle_failures(kappa):
    A = kappa.action.module
    zero = A.zero()
    for quadruple in product(kappa.action.group.elements(), repeat=4):
        if cocycle3_defect(kappa, *quadruple) != zero:
            yield list(quadruple)


def verify_cocycle3(kappa):
    """CheckResult of the 3-cocycle condition; the witness is the first failing quadruple."""
    return first_failure("3-cocycle condition", _cocycle_failures(kappa))


def validate_cocycle3(kappa):
    """
    Raises:
        AxiomError: at the first quadruple violating the cocycle condition
    """
    result = verify_cocycle3(kappa)
    if not result:
        raise AxiomError(
            "3-cocycle condition", result.witness,
            f"κ fails the 3-cocycle condition at (g1, g2, g3, g4) = {tuple(result.witness)}",
        )
    e = kappa.action.group.identity
    if kappa.value(e, e, e) != kappa.action.module.zero():
        raise AxiomError("3-cocycle condition", [e, e, e], "κ(e, e, e) is not zero")
    return kappa


def random_element(module, rng, spread=3):
    """Uniform on finite factors, uniform on [-spread, spread] on free ones."""
    return tuple(rng.randrange(d) if d else rng.randint(-spread, spread) for d in module.invariants)


def random_cochain2(action, rng):
    n = action.group.order
    return Cochain2(action, tuple(random_element(action.module, rng) for _ in range(n * n)))
