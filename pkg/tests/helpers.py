"""Plain, independent reference implementations used as test oracles.

Everything here is deliberately naive: dense Fraction Gauss-Jordan with no
shared code, integer tricks or sparsity, so it can arbitrate the package's
elimination kernel and cohomology dimensions.
"""

from fractions import Fraction
from itertools import combinations

# Filled by the acceptance tests, echoed by the conftest terminal summary.
CRITERION_LINES: list[str] = []


def dense_rref(matrix):
    """Gauss-Jordan over Fractions; returns (pivot columns, rref rows)."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for t in range(r, len(rows)):
            if rows[t][c]:
                pivot = t
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for t in range(len(rows)):
            if t != r and rows[t][c]:
                f = rows[t][c]
                rows[t] = [a - f * b for a, b in zip(rows[t], rows[r])]
        pivots.append(c)
        r += 1
    return pivots, rows[: len(pivots)]


def dense_rank(matrix):
    return len(dense_rref(matrix)[0])


def dense_nullspace(matrix, ncols):
    pivots, rows = dense_rref(matrix)
    piv_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in piv_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for p, row in zip(pivots, rows):
            if row[free]:
                vec[p] = -row[free]
        basis.append(vec)
    return basis


def oracle_h2_dims(L):
    """Cohomology dimensions straight from the definitions, densely.

    Unknowns are xi_ij over pairs i < j; one equation per triple from the
    bracket table; the coboundary matrix columns are the images of the
    basis shifts.
    """
    r = L.dim
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    pair_pos = {p: t for t, p in enumerate(pairs)}
    m = len(pairs)

    def xi_column(k, l):
        if k == l:
            return None
        if k < l:
            return pair_pos[(k, l)], 1
        return pair_pos[(l, k)], -1

    equations = []
    for i, j, l in combinations(range(r), 3):
        row = [Fraction(0)] * m
        for (u, v), third in (((i, j), l), ((j, l), i), ((l, i), j)):
            for k, c in L.bracket(u, v).items():
                hit = xi_column(k, third)
                if hit is not None:
                    col, sign = hit
                    row[col] += c if sign > 0 else -c
        equations.append(row)
    dim_z2 = m - dense_rank(equations) if equations else m
    cob = []
    for k in range(r):
        row = [Fraction(0)] * m
        for (i, j), terms in L.constants.items():
            c = terms.get(k)
            if c:
                row[pair_pos[(i, j)]] = c
        cob.append(row)
    dim_b2 = dense_rank(cob) if cob else 0
    return dim_z2, dim_b2, dim_z2 - dim_b2
