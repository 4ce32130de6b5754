"""
Smith normal form over the integers and the linear algebra built on it:
integer kernels and membership in a column lattice.

Pivot rule: the smallest-magnitude nonzero entry of the active block, ties
broken by lowest (row, col). While a pivot row/column is being cleared, the
replacement pivot is the smallest-magnitude nonzero entry of that row and
column, same tie-break.

The working matrix is kept as sparse rows plus a column index (column ->
rows holding a nonzero there); U is kept by rows and V by columns.
"""

import logging
from dataclasses import dataclass

from abelian_core.int_matrix import IntMatrix
from utilities.errors import DimensionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    """
    U·M·V = S with U, V unimodular and S diagonal, s_1 | s_2 | ...
    U is None when left=False, V is None when right=False.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return [self.S[i, i] for i in range(min(self.S.rows, self.S.cols))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)


def _swap_rows(A, where, a, b):
    ra, rb = A[a], A[b]
    for j in ra:
        where[j].discard(a)
    for j in rb:
        where[j].discard(b)
    A[a], A[b] = rb, ra
    for j in rb:
        where[j].add(a)
    for j in ra:
        where[j].add(b)


def _swap_cols(A, where, a, b):
    for i in where[a] | where[b]:
        row = A[i]
        va = row.pop(a, 0)
        vb = row.pop(b, 0)
        if vb:
            row[a] = vb
        if va:
            row[b] = va
    where[a], where[b] = where[b], where[a]


def _add_vector(vectors, target, source, q, where=None):
    # vectors[target] -= q * vectors[source]
    dst = vectors[target]
    for k, v in vectors[source].items():
        x = dst.get(k, 0) - q * v
        if x:
            dst[k] = x
            if where is not None:
                where[k].add(target)
        else:
            dst.pop(k, None)
            if where is not None:
                where[k].discard(target)


def _add_col(A, where, target, source, q):
    # column target -= q * column source
    for i in list(where[source]):
        row = A[i]
        x = row.get(target, 0) - q * row[source]
        if x:
            row[target] = x
            where[target].add(i)
        else:
            row.pop(target, None)
            where[target].discard(i)


def _smallest(candidates):
    best = None
    for i, j, v in candidates:
        key = (abs(v), i, j)
        if best is None or key < best:
            best = key
    return None if best is None else (best[1], best[2])


def _active_pivot(A, t, m):
    # a unit ends the scan: no later row can beat it on the tie-break
    best = None
    for i in range(t, m):
        for j, v in A[i].items():
            if j >= t:
                key = (abs(v), i, j)
                if best is None or key < best:
                    best = key
        if best is not None and best[0] == 1:
            break
    return None if best is None else (best[1], best[2])


def _cross_entries(A, where, t):
    yield t, t, A[t][t]
    for i in where[t]:
        if i > t:
            yield i, t, A[i][t]
    for j, v in A[t].items():
        if j > t:
            yield t, j, v


def _has_cross(A, where, t):
    return any(i > t for i in where[t]) or any(j > t for j in A[t])


def _first_indivisible_row(A, t, m, p):
    if abs(p) == 1:
        return None
    for i in range(t + 1, m):
        if any(j > t and v % p for j, v in A[i].items()):
            return i
    return None


def snf(M, left=True, right=True):
    """
    Smith normal form of an integer matrix.

    Args:
        M (IntMatrix): any m x n matrix, empty shapes allowed
        left (bool): accumulate U
        right (bool): accumulate V

    Returns:
        SnfResult: U (m x m), S (m x n), V (n x n) with U·M·V = S
    """
    m, n = M.shape
    A = [M.row(i) for i in range(m)]
    where = [set() for _ in range(n)]
    for i, row in enumerate(A):
        for j in row:
            where[j].add(i)
    U = [{i: 1} for i in range(m)] if left else None
    V = [{j: 1} for j in range(n)] if right else None

    def swap_rows(a, b):
        _swap_rows(A, where, a, b)
        if U is not None:
            U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        _swap_cols(A, where, a, b)
        if V is not None:
            V[a], V[b] = V[b], V[a]

    t = 0
    while t < min(m, n):
        pivot = _active_pivot(A, t, m)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)

        while True:
            p = A[t][t]
            for i in sorted(i for i in where[t] if i > t):
                q = A[i][t] // p
                _add_vector(A, i, t, q, where)
                if U is not None:
                    _add_vector(U, i, t, q)
            for j in sorted(j for j in A[t] if j > t):
                q = A[t][j] // p
                _add_col(A, where, j, t, q)
                if V is not None:
                    _add_vector(V, j, t, q)

            if _has_cross(A, where, t):
                i, j = _smallest(_cross_entries(A, where, t))
                if i != t:
                    swap_rows(t, i)
                if j != t:
                    swap_cols(t, j)
                continue

            # pivot must divide the rest of the active block
            bad = _first_indivisible_row(A, t, m, p)
            if bad is None:
                break
            _add_vector(A, t, bad, -1, where)
            if U is not None:
                _add_vector(U, t, bad, -1)

        if A[t][t] < 0:
            A[t] = {j: -v for j, v in A[t].items()}
            if U is not None:
                U[t] = {k: -v for k, v in U[t].items()}
        t += 1

    logger.debug("snf of %dx%d matrix: rank %d", m, n, t)
    S = IntMatrix.from_entries(m, n, ((i, j, v) for i, row in enumerate(A) for j, v in row.items()))
    if U is not None:
        U = IntMatrix.from_entries(m, m, ((i, k, v) for i, row in enumerate(U) for k, v in row.items()))
    if V is not None:
        V = IntMatrix.from_entries(n, n, ((k, j, v) for j, col in enumerate(V) for k, v in col.items()))
    return SnfResult(U=U, S=S, V=V)

def kernel_basis(M, result=None):
    """
    Basis of the integer kernel {x : Mx = 0}, as the columns of a matrix with
    cols(M) rows and cols(M) - rank(M) columns. The lattice it spans is
    saturated because the columns come from the unimodular V.
    """
    result = result or snf(M)
    r = result.rank
    columns = result.V.columns()[r:]
    return IntMatrix.from_columns(columns, M.cols)


def _solve(result, vector, cols):
    rhs = result.U.apply(vector)
    diagonal = result.diagonal
    r = result.rank
    y = [0] * cols
    for i, s in enumerate(diagonal[:r]):
        if rhs[i] % s:
            return None
        y[i] = rhs[i] // s
    if any(rhs[r:]):
        return None
    return result.V.apply(y)


def solve_membership(M, vector):
    """
    Solve M·x = v over the integers.

    Returns:
        list or None: an integer solution x, or None when v is not in the
        column lattice of M

    Raises:
        DimensionError: if len(v) != rows(M)
    """
    if len(vector) != M.rows:
        raise DimensionError(f"vector of length {len(vector)} for matrix with {M.rows} rows")
    return _solve(snf(M), list(vector), M.cols)


def solve_many(M, vectors, result=None):
    """solve_membership for several right-hand sides, sharing one SNF."""
    result = result or snf(M)
    out = []
    for vector in vectors:
        if len(vector) != M.rows:
            raise DimensionError(f"vector of length {len(vector)} for matrix with {M.rows} rows")
        out.append(_solve(result, list(vector), M.cols))
    return out


def in_column_span(M, vector):
    """True when v lies in the column lattice of M; diagonal-like M is checked directly."""
    moduli = M.monomial_moduli()
    if moduli is not None:
        if len(vector) != M.rows:
            raise DimensionError(f"vector of length {len(vector)} for matrix with {M.rows} rows")
        for v, mod in zip(vector, moduli):
            if (v != 0) if mod == 0 else (v % mod != 0):
                return False
        return True
    return solve_membership(M, vector) is not None


def is_unimodular(M):
    """Square with determinant ±1, decided by the SNF of M itself."""
    if M.rows != M.cols:
        return False
    return all(d == 1 for d in snf(M, left=False, right=False).diagonal)
