"""
Homology of a three-term complex of presented abelian groups

    C'' --D_prev--> C --D_cur--> C'

where C = Z^c / col(R_cur) and C' = Z^c' / col(R_next), and the maps are
given by integer lifts on the free covers.
"""

import logging
from math import gcd, lcm

from abelian_core.fg_groups import cokernel_invariants
from abelian_core.int_matrix import IntMatrix
from abelian_core.snf import in_column_span, kernel_basis, snf
from utilities.errors import ComplexError, DimensionError

logger = logging.getLogger(__name__)


def _check_shapes(R_cur, D_prev, D_cur, R_next):
    c = R_cur.rows
    if D_prev.rows != c:
        raise DimensionError(f"D_prev has {D_prev.rows} rows, middle ambient rank is {c}")
    if D_cur.cols != c:
        raise DimensionError(f"D_cur has {D_cur.cols} columns, middle ambient rank is {c}")
    if D_cur.rows != R_next.rows:
        raise DimensionError(f"D_cur has {D_cur.rows} rows, target ambient rank is {R_next.rows}")


def check_compatible(D, R_source, R_target):
    """
    D sends the relations of the source into the relations of the target,
    so it induces a homomorphism of the presented groups.

    Raises:
        ComplexError: naming the first relation column that escapes
    """
    image = D @ R_source
    moduli = R_target.monomial_moduli()
    if moduli is not None:
        for i, j, v in image.items():
            if moduli[i] == 0 or v % moduli[i]:
                raise ComplexError(f"relation column {j} is not mapped into the target relations")
        return
    for j, column in enumerate(image.columns()):
        if any(column) and not in_column_span(R_target, column):
            raise ComplexError(f"relation column {j} is not mapped into the target relations")


def cycle_generators(D_cur, R_next):
    """
    Generators of Z = {x : D_cur·x ∈ col(R_next)}: the x-parts of the kernel of
    the block matrix [D_cur | R_next].

    When R_next is monomial the congruences (D_cur x)_i ≡ 0 (mod m_i) are
    swept row by row instead, which returns a basis of the same lattice.
    """
    moduli = R_next.monomial_moduli()
    if moduli is not None:
        return _cycle_basis_by_rows(D_cur, moduli)
    K = kernel_basis(IntMatrix.hstack(D_cur, R_next))
    return K.take_rows(0, D_cur.cols)


def _add_column(columns, touching, target, source, q):
    # columns[target] -= q * columns[source]
    dst = columns[target]
    for j, v in columns[source].items():
        x = dst.get(j, 0) - q * v
        if x:
            dst[j] = x
            touching[j].add(target)
        else:
            dst.pop(j, None)
            touching[j].discard(target)


def _cycle_basis_by_rows(D, moduli):
    c = D.cols
    # basis vectors of Z by id, each a sparse {coordinate: value}; ids keep their order
    columns = {l: {l: 1} for l in range(c)}
    touching = [{j} for j in range(c)]
    # a column divisible by every modulus satisfies all remaining rows
    common = None if 0 in moduli else lcm(*moduli)
    frozen = {}
    for i in range(D.rows):
        row = D.row(i)
        if not row or not columns:
            continue
        m = moduli[i]
        w = {}
        for j, v in row.items():
            for l in touching[j]:
                w[l] = w.get(l, 0) + v * columns[l][j]
        if m:
            w = {l: x % m for l, x in w.items()}
        live = sorted(l for l, x in w.items() if x)
        if not live:
            continue

        # unimodular column operations until one column carries gcd(w)
        while len(live) > 1:
            p = min(live, key=lambda l: (abs(w[l]), l))
            for l in live:
                if l == p:
                    continue
                q = w[l] // w[p]
                if q:
                    w[l] -= q * w[p]
                    _add_column(columns, touching, l, p, q)
            live = [l for l in live if w[l]]
        p = live[0]

        if m:
            factor = m // gcd(w[p], m)
            column = columns[p]
            for j in column:
                column[j] *= factor
            if common and all(v % common == 0 for v in column.values()):
                for j in column:
                    touching[j].discard(p)
                frozen[p] = columns.pop(p)
        else:
            for j in columns.pop(p):
                touching[j].discard(p)
    columns.update(frozen)
    ids = sorted(columns)
    return IntMatrix.from_entries(
        c, len(ids), ((j, k, v) for k, l in enumerate(ids) for j, v in columns[l].items())
    )


def _boundary_coordinates(z_snf, boundaries):
    """
    With U·Z·V = S of rank r, the rows U·b / s_i (i < r) for every boundary
    column b. These differ from the coordinates of the boundaries in the
    generators of Z, stacked with the syzygies V[:, r:], by the unimodular
    V⁻¹ and the unit rows r.., so the two have the same cokernel.

    Raises:
        ComplexError: naming the first boundary column that is not a cycle
    """
    diagonal = z_snf.diagonal
    r = z_snf.rank
    Ut = z_snf.U.transpose()
    u_columns = [Ut.row(k) for k in range(Ut.rows)]
    entries = []
    for j, b in enumerate(boundaries.transpose().row(j) for j in range(boundaries.cols)):
        rhs = {}
        for k, v in b.items():
            for i, u in u_columns[k].items():
                rhs[i] = rhs.get(i, 0) + u * v
        for i, x in rhs.items():
            if not x:
                continue
            if i >= r or x % diagonal[i]:
                raise ComplexError(
                    f"boundary column {j} is not a cycle: the composite differential is nonzero"
                )
            entries.append((i, j, x // diagonal[i]))
    return IntMatrix.from_entries(r, boundaries.cols, entries)


def homology_at(R_cur, D_prev, D_cur, R_next, check=True):
    """
    ker(C -> C') / im(C'' -> C) as an FgAbGroup.

    Steps: (1) generators of Z = {x : D_cur·x ∈ col(R_next)}; (2) the columns
    of [D_prev | R_cur] written in those generators, modulo the relations
    among the generators, form a relation matrix W; (3) the result is the
    cokernel of W.

    Raises:
        ComplexError: if D_cur does not respect the relations, or the image of
            D_prev is not contained in the cycles
    """
    _check_shapes(R_cur, D_prev, D_cur, R_next)
    if check:
        check_compatible(D_cur, R_cur, R_next)

    Z = cycle_generators(D_cur, R_next)
    logger.debug(
        "homology_at: middle rank %d, %d cycle generators, %d boundaries",
        R_cur.rows, Z.cols, D_prev.cols + R_cur.cols,
    )
    boundaries = IntMatrix.hstack(D_prev, R_cur)
    W = _boundary_coordinates(snf(Z, right=False), boundaries)
    return cokernel_invariants(W)
