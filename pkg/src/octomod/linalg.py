"""Exact dense/sparse rational matrix helpers.

Matrices are lists of row lists of ``Fraction``.  Products go through a
common-denominator integer pass, which is much faster than multiplying
Fractions entry by entry.
"""

from fractions import Fraction
from functools import reduce
from math import lcm


ZERO = Fraction(0)


def zeros(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def _int_form(a):
    den = reduce(lcm, (x.denominator for row in a for x in row), 1)
    return [[x.numerator * (den // x.denominator) for x in row] for row in a], den


def mat_mul(a, b):
    if not a:
        return []
    if len(a[0]) != len(b):
        raise ValueError("cannot multiply %dx%d by %dx%d" % (shape(a) + shape(b)))
    ai, da = _int_form(a)
    bi, db = _int_form(b)
    cols = len(b[0]) if b else 0
    bt = list(zip(*bi)) if b else [()] * cols
    den = da * db
    out = []
    for row in ai:
        nz = [(k, x) for k, x in enumerate(row) if x]
        sums = (sum(x * col[k] for k, x in nz) for col in bt)
        out.append([Fraction(t, den) if t else ZERO for t in sums])
    return out


def mat_vec(a, v):
    if a and len(a[0]) != len(v):
        raise ValueError("matrix has %d columns, vector has %d entries" % (len(a[0]), len(v)))
    nz = [(k, x) for k, x in enumerate(v) if x]
    return [sum((r[k] * x for k, x in nz if r[k]), ZERO) for r in a]


def mat_add(a, b):
    return [[(x + y if y else x) if x else y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(c, a):
    c = Fraction(c)
    return [[c * x for x in r] for r in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def is_zero(a):
    return not any(x for r in a for x in r)


def block_diag(blocks):
    n = sum(len(b) for b in blocks)
    m = sum(len(b[0]) for b in blocks)
    out = zeros(n, m)
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[r0 + i][c0:c0 + len(row)] = row
        r0 += len(b)
        c0 += len(b[0])
    return out


def hstack(a, b):
    return [list(r) + list(s) for r, s in zip(a, b)]


# ---------------------------------------------------------------------------
# elimination on sparse rows

def _sparse_rows(rows):
    out = []
    for r in rows:
        if isinstance(r, dict):
            d = {k: Fraction(v) for k, v in r.items() if v}
        else:
            d = {k: Fraction(v) for k, v in enumerate(r) if v}
        if d:
            out.append(d)
    return out


def rref_sparse(rows):
    """Reduced row echelon form of sparse rows (dicts col -> value).

    Returns ``(pivot_rows, pivots)`` where ``pivot_rows[i]`` has a 1 in column
    ``pivots[i]`` and zeros in every other pivot column.
    """
    basis = {}  # pivot col -> row
    for row in _sparse_rows(rows):
        # basis rows are fully reduced, so one pass per pivot column suffices
        for col in sorted(set(row) & basis.keys()):
            c = row.get(col)
            if not c:
                continue
            for k, v in basis[col].items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if not row:
            continue
        piv = min(row)
        inv = 1 / row[piv]
        row = {k: v * inv for k, v in row.items()}
        for col, other in basis.items():
            c = other.get(piv)
            if c:
                for k, v in row.items():
                    nv = other.get(k, 0) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        basis[piv] = row
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def rank(rows):
    return len(rref_sparse(rows)[1])


def row_space(rows):
    """Canonical (reduced) basis of the span of ``rows`` as sparse dicts."""
    return rref_sparse(rows)[0]


def nullspace(rows, ncols):
    """Basis of ``{v : rows @ v = 0}`` as dense Fraction lists."""
    prow, pivots = rref_sparse(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(prow, pivots):
            c = r.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def kernel(a):
    """Kernel basis of a dense matrix (column vectors as lists)."""
    return nullspace(a, shape(a)[1] if a else 0)


def column_space(a):
    """Reduced basis of the column span of ``a``."""
    return row_space(transpose(a)) if a and a[0] else []


def same_span(u, v):
    """Whether two lists of vectors (dense or sparse) span the same subspace."""
    ru = row_space(u)
    rv = row_space(v)
    return ru == rv
