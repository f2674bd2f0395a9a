"""Exact dense linear algebra over Q and Q(delta).

Plain Gaussian elimination with first-nonzero pivoting; every entry type
that supports field arithmetic and truthiness (Fraction, Scalar) works, and
the two may be mixed freely since Scalar coerces rational operands.  The
matrices arising here are tiny (at most n**2 x n**2 with n <= 6), so no
pivoting strategy or fraction-free variant is needed.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(size):
    mat = zeros(size, size)
    for i in range(size):
        mat[i][i] = Fraction(1)
    return mat


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = Fraction(0)
            for k in range(inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum((a[i][k] * v[k] for k in range(len(v))), Fraction(0))
            for i in range(len(a))]


def vec_mat(v, a):
    return [sum((v[k] * a[k][j] for k in range(len(v))), Fraction(0))
            for j in range(len(a[0]))]


def _eliminate(mat):
    """Row-reduce in place; return the list of pivot column indices."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, rows) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = Fraction(1) / mat[row][col]
        mat[row] = [entry * inv for entry in mat[row]]
        for r in range(rows):
            if r != row and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    return pivots


def rank(mat):
    if not mat:
        return 0
    work = [list(row) for row in mat]
    return len(_eliminate(work))


def solve(mat, rhs):
    """Solve mat @ x = rhs for square invertible mat.

    rhs may be a vector or a matrix of stacked column vectors; the result has
    the same shape.  Raises ValueError when mat is singular.
    """
    size = len(mat)
    vector = not isinstance(rhs[0], (list, tuple))
    columns = [[v] for v in rhs] if vector else [list(row) for row in rhs]
    work = [list(row) + columns[i] for i, row in enumerate(mat)]
    pivots = _eliminate(work)
    if len(pivots) < size or pivots != list(range(size)):
        raise ValueError("matrix is singular")
    sol = [row[size:] for row in work]
    return [row[0] for row in sol] if vector else sol


def inverse(mat):
    return solve(mat, identity(len(mat)))


def is_identity(mat):
    size = len(mat)
    return all(
        mat[i][j] == (1 if i == j else 0)
        for i in range(size)
        for j in range(size)
    )


def mats_equal(a, b):
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )
