"""
The data a secondary cochain complex is built from, and element-index
lookup tables that let face maps run on plain integers.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from abelian_core.fg_groups import FgAbGroup
from complexes.tuples import TupleSpace
from group_data.actions import trivial_action
from group_data.cocycles import Cocycle3, validate_cocycle3
from group_data.finite_group import trivial_group
from utilities.errors import DimensionError


class Variant(str, Enum):
    ABELIAN = "abelian"      # ₂C^n(A, B): no group part
    TRIPLE = "triple"        # ₂C^n(G, A, κ; B)
    CLASSICAL = "classical"  # bar complex C^n(G, B): no A part

    @property
    def has_group_part(self):
        return self is not Variant.ABELIAN

    @property
    def has_pair_part(self):
        return self is not Variant.CLASSICAL

    @property
    def twisted(self):
        """The first face is acted on by g_1."""
        return self is not Variant.ABELIAN


@dataclass(frozen=True)
class ComplexData:
    variant: Variant
    action_a: object  # GAction of G on A
    action_b: object  # GAction of G on B
    kappa: object = None  # Cocycle3, TRIPLE only

    def __post_init__(self):
        if self.action_a.group != self.action_b.group:
            raise DimensionError("A and B are modules over different groups")
        if self.variant is Variant.TRIPLE and self.kappa is None:
            raise DimensionError("the triple variant needs a 3-cocycle")
        if self.kappa is not None and self.kappa.action != self.action_a:
            raise DimensionError("κ is not a cocycle for the action on A")
        if self.variant.has_pair_part and not self.A.is_finite:
            raise DimensionError(f"A must be finite, got {self.A}")
        if self.variant is Variant.TRIPLE:
            validate_cocycle3(self.kappa)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def abelian(cls, A, B):
        G = trivial_group()
        return cls(Variant.ABELIAN, trivial_action(G, A), trivial_action(G, B))

    @classmethod
    def triple(cls, action_a, action_b, kappa):
        return cls(Variant.TRIPLE, action_a, action_b, kappa)

    @classmethod
    def classical(cls, action_b):
        G = action_b.group
        return cls(Variant.CLASSICAL, trivial_action(G, FgAbGroup.trivial()), action_b)

    def with_kappa(self, kappa):
        return ComplexData(self.variant, self.action_a, self.action_b, kappa)

    # ------------------------------------------------------------------

    @property
    def G(self):
        return self.action_a.group

    @property
    def A(self):
        return self.action_a.module

    @property
    def B(self):
        return self.action_b.module

    @property
    def r(self):
        """Rank of B's presentation: coefficient slots per tuple."""
        return self.B.rank

    def space(self, n):
        return TupleSpace(
            n,
            self.G.order if self.variant.has_group_part else 0,
            self.A.order if self.variant.has_pair_part else 0,
        )

    def size(self, n):
        return self.space(n).size

    def ambient_rank(self, n):
        return self.size(n) * self.r

    # ------------------------------------------------------------------
    # index arithmetic: elements of G and A as positions in enumeration order

    @cached_property
    def ops(self):
        return IndexOps(self)

    def a_element(self, digit):
        return self.ops.a_elements[digit]

    def a_digit(self, element):
        return self.A.index_of(element)

    def to_digits(self, tau):
        """TupleIndex -> (g_digits, a_digits)."""
        return tuple(tau.gpart), tuple(self.a_digit(x) for x in tau.apart)


class IndexOps:
    """Group and module operations on element indices, backed by lookup tables."""

    def __init__(self, data):
        G, A = data.G, data.A
        self.G = G
        self.a_elements = A.elements() if A.is_finite else []
        index = {x: i for i, x in enumerate(self.a_elements)}
        self._add = [[index[A.add(x, y)] for y in self.a_elements] for x in self.a_elements]
        self._neg = [index[A.neg(x)] for x in self.a_elements]
        self._act = [[index[data.action_a.act(g, x)] for x in self.a_elements] for g in G.elements()]
        kappa = data.kappa if data.kappa is not None else Cocycle3.zero(data.action_a)
        self._kappa = [index[v] for v in kappa.values]
        self._n = G.order

    def add(self, x, y):
        return self._add[x][y]

    def sub(self, x, y):
        return self._add[x][self._neg[y]]

    def act(self, g, x):
        return self._act[g][x]

    def kappa(self, g1, g2, g3):
        n = self._n
        return self._kappa[(g1 * n + g2) * n + g3]

    def mul(self, g, h):
        return self.G.table[g][h]

    def product(self, elements):
        return self.G.product(elements)
