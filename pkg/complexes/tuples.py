"""
Index spaces of the secondary cochain groups.

A degree-n tuple is (g; a) with g = (g_1, ..., g_n) in G^n and
a = (a_{i,j}), 0 <= i < j <= n-1, in A^{n(n-1)/2}. Tuples are numbered by
one mixed-radix integer: the g-digits (radix |G|) most significant, then the
a-digits (radix |A|), each digit being the position of the element in the
group's enumeration order.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from utilities.errors import DimensionError


def pair_count(n):
    return n * (n - 1) // 2


def pair_position(i, j, n):
    """Lexicographic rank of (i, j) among the pairs 0 <= i < j <= n-1."""
    if not 0 <= i < j <= n - 1:
        raise DimensionError(f"pair ({i}, {j}) outside 0 <= i < j <= {n - 1}")
    return i * (n - 1) - i * (i - 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def pair_list(n):
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class PairIndexSpace:
    n: int

    @property
    def pairs(self):
        return pair_list(self.n)

    def __len__(self):
        return pair_count(self.n)

    def position(self, i, j):
        return pair_position(i, j, self.n)


@dataclass(frozen=True)
class TupleIndex:
    """gpart holds group element indices, apart holds A-elements ordered by PairIndexSpace."""

    gpart: tuple
    apart: tuple

    @property
    def degree(self):
        return len(self.gpart)


@dataclass(frozen=True)
class TupleSpace:
    """
    All degree-n tuples for given radices. g_radix is 0 when the variant has
    no group part; a_radix is 0 when it has no A part.
    """

    n: int
    g_radix: int
    a_radix: int

    @property
    def g_length(self):
        return self.n if self.g_radix else 0

    @property
    def a_length(self):
        return pair_count(self.n) if self.a_radix else 0

    @property
    def size(self):
        return self.g_radix ** self.g_length * self.a_radix ** self.a_length

    def radices(self):
        return (self.g_radix,) * self.g_length + (self.a_radix,) * self.a_length

    def encode(self, g_digits, a_digits):
        if len(g_digits) != self.g_length or len(a_digits) != self.a_length:
            raise DimensionError(
                f"tuple with {len(g_digits)} g-digits and {len(a_digits)} a-digits "
                f"in degree {self.n}"
            )
        index = 0
        for digit in g_digits:
            index = index * self.g_radix + digit
        for digit in a_digits:
            index = index * self.a_radix + digit
        return index

    def decode(self, index):
        if not 0 <= index < self.size:
            raise DimensionError(f"tuple index {index} outside 0..{self.size - 1}")
        a_digits = []
        for _ in range(self.a_length):
            index, digit = divmod(index, self.a_radix)
            a_digits.append(digit)
        g_digits = []
        for _ in range(self.g_length):
            index, digit = divmod(index, self.g_radix)
            g_digits.append(digit)
        return tuple(reversed(g_digits)), tuple(reversed(a_digits))

    def digits(self):
        """(g_digits, a_digits) for every tuple, in index order."""
        g_len = self.g_length
        for digits in product(*(range(r) for r in self.radices())):
            yield digits[:g_len], digits[g_len:]

    def sample(self, rng, count):
        """Every tuple when there are at most count of them, else count random ones."""
        if self.size <= count:
            yield from self.digits()
            return
        for _ in range(count):
            yield self.decode(rng.randrange(self.size))
