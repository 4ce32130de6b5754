"""
Face maps d_n^k from degree n+1 tuples to degree n tuples, k = 0..n+1.

Group part (1-based, as in the bar complex):
    h_i = g_i            for i < k
    h_k = g_k g_{k+1}
    h_i = g_{i+1}        for i > k

Pair part, for 0 <= i < j <= n-1:
    b_{i,j} = a_{i,j}                          j < k-1
    b_{i,k-1} = a_{i,k-1} + a_{i,k} - p·a_{k-1,k} + κ(p, g_k, g_{k+1})
                                               with p = g_{i+1}⋯g_{k-1}
    b_{i,j} = a_{i,j+1}                        i <= k-1 < j
    b_{i,j} = a_{i+1,j+1}                      k-1 < i

In the plain case the action and κ terms drop out. The same code runs on
group elements and on element indices; only the `ops` object differs.
"""

from functools import lru_cache
from itertools import product

from abelian_core.int_matrix import IntMatrix
from complexes.tuples import pair_count, pair_list, pair_position
from utilities.checks import CheckResult
from utilities.errors import DimensionError


class _ModuleOps:
    """ops over GroupElements of A, optionally with an action and κ."""

    def __init__(self, A, action=None, kappa=None):
        self.A = A
        self.action = action
        self.kappa_table = kappa

    def add(self, x, y):
        return self.A.add(x, y)

    def sub(self, x, y):
        return self.A.sub(x, y)

    def act(self, g, x):
        return self.action.act(g, x)

    def kappa(self, g1, g2, g3):
        return self.kappa_table.value(g1, g2, g3)

    def mul(self, g, h):
        return self.action.group.mul(g, h)

    def product(self, elements):
        return self.action.group.product(elements)


@lru_cache(maxsize=None)
def _pair_recipe(n, k):
    """
    For each target pair, either ("copy", src) or ("merge", i, p_ik1, p_ik, p_k1k)
    with source positions in degree n+1.
    """
    m = n + 1
    recipe = []
    for i, j in pair_list(n):
        if j < k - 1:
            recipe.append(("copy", pair_position(i, j, m)))
        elif j == k - 1:
            recipe.append((
                "merge", i,
                pair_position(i, k - 1, m),
                pair_position(i, k, m),
                pair_position(k - 1, k, m),
            ))
        elif i <= k - 1:
            recipe.append(("copy", pair_position(i, j + 1, m)))
        else:
            recipe.append(("copy", pair_position(i + 1, j + 1, m)))
    return tuple(recipe)


def _check_face(n, k, a_len=None, g_len=None):
    if n < 0 or not 0 <= k <= n + 1:
        raise DimensionError(f"face index k={k} outside 0..{n + 1}")
    if a_len is not None and a_len != pair_count(n + 1):
        raise DimensionError(f"pair part has {a_len} entries, degree {n + 1} needs {pair_count(n + 1)}")
    if g_len is not None and g_len != n + 1:
        raise DimensionError(f"group part has {g_len} entries, degree {n + 1} needs {n + 1}")


def group_face(n, k, g, mul):
    g = tuple(g)
    if k == 0:
        return g[1:]
    if k == n + 1:
        return g[:n]
    return g[:k - 1] + (mul(g[k - 1], g[k]),) + g[k + 1:]


def pair_face(n, k, g, a, ops, twisted):
    out = []
    for step in _pair_recipe(n, k):
        if step[0] == "copy":
            out.append(a[step[1]])
            continue
        _, i, p_a, p_b, p_c = step
        x = ops.add(a[p_a], a[p_b])
        if twisted:
            p = ops.product(g[i:k - 1])
            x = ops.sub(x, ops.act(p, a[p_c]))
            x = ops.add(x, ops.kappa(p, g[k - 1], g[k]))
        else:
            x = ops.sub(x, a[p_c])
        out.append(x)
    return tuple(out)


def face_plain(n, k, a, A):
    """d_n^k on the pair part of ₂C(A, B); a is a tuple of A-elements."""
    _check_face(n, k, a_len=len(a))
    return pair_face(n, k, (), a, _ModuleOps(A), twisted=False)


def face_twisted(n, k, g, a, kappa, action_a):
    """
    d_n^k of the triple (G, A, κ).

    Args:
        g: n+1 group element indices
        a: (n+1)n/2 elements of A
        kappa (Cocycle3): over action_a
        action_a (GAction): action of G on A

    Returns:
        tuple: (h, b), the degree-n group and pair parts
    """
    _check_face(n, k, a_len=len(a), g_len=len(g))
    ops = _ModuleOps(action_a.module, action_a, kappa)
    return group_face(n, k, g, ops.mul), pair_face(n, k, tuple(g), a, ops, twisted=True)


def face_classical(n, k, g, G):
    """Bar-complex face: drop g_1, multiply g_k g_{k+1}, or drop g_{n+1}."""
    _check_face(n, k, g_len=len(g))
    return group_face(n, k, g, G.mul)


def face_digits(data, n, k, g_digits, a_digits):
    """d_n^k on element indices for any variant of data."""
    ops = data.ops
    h = group_face(n, k, g_digits, ops.mul) if data.variant.has_group_part else ()
    if data.variant.has_pair_part:
        b = pair_face(n, k, g_digits, a_digits, ops, data.variant.twisted)
    else:
        b = ()
    return h, b


@lru_cache(maxsize=16)
def face_recipes(data, n):
    """
    For every degree n+1 tuple index, the source index of each face k = 0..n+1
    and the group element twisting the k=0 face (None when untwisted).
    """
    source = data.space(n)
    target = data.space(n + 1)
    twisted = data.variant.twisted
    recipes = []
    for g_digits, a_digits in target.digits():
        faces = []
        for k in range(n + 2):
            h, b = face_digits(data, n, k, g_digits, a_digits)
            faces.append(source.encode(h, b))
        twist = g_digits[0] if twisted and g_digits else None
        recipes.append((tuple(faces), twist))
    return recipes


def plain_face_matrix(n, k):
    """
    The plain d_n^k is linear in the pair entries: this integer matrix
    (pair_count(n) x pair_count(n+1)) computes it over any abelian A.
    """
    _check_face(n, k)
    entries = []
    for row, step in enumerate(_pair_recipe(n, k)):
        if step[0] == "copy":
            entries.append((row, step[1], 1))
        else:
            _, _, p_a, p_b, p_c = step
            entries.extend([(row, p_a, 1), (row, p_b, 1), (row, p_c, -1)])
    return IntMatrix.from_entries(pair_count(n), pair_count(n + 1), entries)


def simplicial_pairs(n):
    """(k, l) with 0 <= k < l <= n+1: the identities d_{n-1}^k d_n^l = d_{n-1}^{l-1} d_n^k."""
    return [(k, l) for l in range(n + 2) for k in range(l)]


def check_simplicial_identity(n):
    """The plain simplicial identities in degree n, for every abelian A at once."""
    for k, l in simplicial_pairs(n):
        left = plain_face_matrix(n - 1, k) @ plain_face_matrix(n, l)
        right = plain_face_matrix(n - 1, l - 1) @ plain_face_matrix(n, k)
        if left != right:
            return CheckResult(f"simplicial_identity_{n}", False, {"k": k, "l": l})
    return CheckResult(f"simplicial_identity_{n}", True)


def check_simplicial_identity_on(A, n, rng=None, samples=None):
    """
    The same identities evaluated on elements of a finite A, over every pair
    part (samples=None) or over random ones.
    """
    elements = A.elements()
    m = pair_count(n + 1)
    if samples is None:
        tuples = product(elements, repeat=m)
    else:
        tuples = (tuple(rng.choice(elements) for _ in range(m)) for _ in range(samples))
    name = f"simplicial_identity_{n}_{A}"
    for a in tuples:
        for k, l in simplicial_pairs(n):
            left = face_plain(n - 1, k, face_plain(n, l, a, A), A)
            right = face_plain(n - 1, l - 1, face_plain(n, k, a, A), A)
            if left != right:
                return CheckResult(name, False, {"k": k, "l": l, "a": [list(x) for x in a]})
    return CheckResult(name, True)
