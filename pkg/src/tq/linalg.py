"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fractions.  Vectors are row vectors: a linear
map is applied as v |-> v @ M, so a map from Q^r to Q^c is an r x c matrix
whose i-th row is the image of the i-th standard basis vector.

All reductions use reduced row echelon form with leftmost-pivot
tie-breaking, so every basis produced here is deterministic.
"""

from __future__ import annotations

from fractions import Fraction

Vec = list[Fraction]
Mat = list[Vec]


def vec(xs) -> Vec:
    return [Fraction(x) for x in xs]


def mat(rows) -> Mat:
    return [vec(r) for r in rows]


def zeros(r: int, c: int) -> Mat:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Mat:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(a: Mat) -> Mat:
    if not a:
        return []
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def mat_mul(a: Mat, b: Mat) -> Mat:
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k, "shape mismatch"
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def vec_mat(v: Vec, a: Mat) -> Vec:
    return mat_mul([v], a)[0]


def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    r = [row[:] for row in a]
    if not r:
        return [], []
    nrows, ncols = len(r), len(r[0])
    pivots: list[int] = []
    lead = 0
    for col in range(ncols):
        piv = next((i for i in range(lead, nrows) if r[i][col] != 0), None)
        if piv is None:
            continue
        r[lead], r[piv] = r[piv], r[lead]
        inv = 1 / r[lead][col]
        r[lead] = [x * inv for x in r[lead]]
        for i in range(nrows):
            if i != lead and r[i][col] != 0:
                c = r[i][col]
                r[i] = [x - c * y for x, y in zip(r[i], r[lead])]
        pivots.append(col)
        lead += 1
        if lead == nrows:
            break
    return r, pivots


def row_space_basis(a: Mat) -> Mat:
    """Deterministic basis (RREF rows) of the span of the rows of a."""
    r, pivots = rref(a)
    return [r[i][:] for i in range(len(pivots))]


def left_kernel_basis(a: Mat) -> Mat:
    """Deterministic basis of {v : v @ a = 0}."""
    n = len(a)
    if n == 0:
        return []
    if not a[0]:
        return identity(n)
    r, pivots = rref(transpose(a))
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][j]
        basis.append(v)
    return basis


def solve_left(a: Mat, b: Vec) -> Vec | None:
    """One deterministic solution x of x @ a = b, or None.  Free variables
    are set to zero relative to the RREF pivot structure of a^T."""
    if not a:
        return None if any(b) else []
    at = transpose(a)
    n = len(a)
    aug = [at[i] + [b[i]] for i in range(len(at))]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = r[i][n]
    return x


def coords_in_basis(basis: Mat, v: Vec) -> Vec:
    """Coordinates of v in a linearly independent row basis (error if v is
    outside the span)."""
    if not basis:
        if any(v):
            raise ValueError("vector outside span of empty basis")
        return []
    c = solve_left(basis, v)
    if c is None:
        raise ValueError("vector outside span of basis")
    return c


def det(a: Mat) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    assert all(len(row) == n for row in a), "determinant of non-square matrix"
    m = [row[:] for row in a]
    result = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        result *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                c = m[i][col] * inv
                m[i] = [x - c * y for x, y in zip(m[i], m[col])]
    return result


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r[:n]]


def is_invertible(a: Mat) -> bool:
    return bool(a) and len(a) == len(a[0]) and det(a) != 0
