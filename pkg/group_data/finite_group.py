"""
Finite groups given by multiplication tables, elements 0..n-1.
"""

from dataclasses import dataclass, field
from functools import reduce
from itertools import permutations, product

from utilities.errors import AxiomError


@dataclass(frozen=True)
class FiniteGroup:
    """A validated group: table[x][y] is the index of x·y."""

    table: tuple
    identity: int
    name: str = ""
    inverses: tuple = field(default=(), compare=False)

    @property
    def order(self):
        return len(self.table)

    def elements(self):
        return range(self.order)

    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self.inverses[x]

    def product(self, elements):
        """Ordered product of a sequence; the empty product is the identity."""
        return reduce(self.mul, elements, self.identity)

    @property
    def is_abelian(self):
        t = self.table
        return all(t[x][y] == t[y][x] for x in self.elements() for y in self.elements())

    def __str__(self):
        return self.name or f"group of order {self.order}"


def validate_group(table, identity=None, name=""):
    """
    Check the group axioms on a multiplication table.

    Args:
        table: square table of element indices
        identity (int): expected identity, found automatically when None
        name (str): display name

    Returns:
        FiniteGroup: the validated group

    Raises:
        AxiomError: naming the first violated axiom and its witnesses
    """
    rows = [tuple(int(v) for v in row) for row in table]
    n = len(rows)
    if n == 0:
        raise AxiomError("nonempty", None, "a group needs at least one element")
    for x, row in enumerate(rows):
        if len(row) != n:
            raise AxiomError("square table", [x], f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise AxiomError("closure", [x, y], f"table[{x}][{y}] = {v} is not an element")

    everything = set(range(n))
    for x, row in enumerate(rows):
        if set(row) != everything:
            raise AxiomError("latin square", [x], f"row {x} is not a permutation of the elements")
    for y in range(n):
        if {rows[x][y] for x in range(n)} != everything:
            raise AxiomError("latin square", [y], f"column {y} is not a permutation of the elements")

    for x, y, z in product(range(n), repeat=3):
        if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
            raise AxiomError(
                "associativity", [x, y, z],
                f"(x·y)·z != x·(y·z) at (x, y, z) = ({x}, {y}, {z})",
            )

    found = [e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))]
    if not found:
        raise AxiomError("identity", None, "no two-sided identity element")
    e = found[0]
    if identity is not None and int(identity) != e:
        raise AxiomError("identity", [int(identity)], f"declared identity {identity} is not the identity {e}")

    inverses = []
    for x in range(n):
        inv = next((y for y in range(n) if rows[x][y] == e and rows[y][x] == e), None)
        if inv is None:
            raise AxiomError("inverse", [x], f"element {x} has no inverse")
        inverses.append(inv)

    return FiniteGroup(tuple(rows), e, name, tuple(inverses))


# ----------------------------------------------------------------------
# constructors

def trivial_group():
    return validate_group([[0]], name="1")


def cyclic(n):
    return validate_group([[(x + y) % n for y in range(n)] for x in range(n)], 0, f"Z{n}")


def direct_product(G, H):
    """Elements (g, h) indexed g·|H| + h."""
    m = H.order
    table = [
        [G.mul(x // m, y // m) * m + H.mul(x % m, y % m) for y in range(G.order * m)]
        for x in range(G.order * m)
    ]
    return validate_group(table, G.identity * m + H.identity, f"{G}x{H}")


def symmetric(k):
    """S_k by composition (p∘q)(i) = p[q[i]], permutations in lexicographic order."""
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(k))] for q in perms]
        for p in perms
    ]
    return validate_group(table, 0, f"S{k}")


def permutation_sign(k):
    """Sign of each element of symmetric(k), in the same order."""
    signs = []
    for p in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if p[i] > p[j])
        signs.append(-1 if inversions % 2 else 1)
    return signs


def from_abelian(A):
    """The finite FgAbGroup A as a table group, elements in A.elements() order."""
    elements = A.elements()
    table = [[A.index_of(A.add(x, y)) for y in elements] for x in elements]
    return validate_group(table, A.index_of(A.zero()), str(A))
