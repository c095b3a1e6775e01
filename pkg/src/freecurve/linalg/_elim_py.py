"""Reference elimination kernels (pure Python + numpy).

This is the fallback backend; the compiled Cython module implements the same
four entry points.  Prime-field matrices with p < 2^31 go through vectorized
numpy row reduction (products stay below 2^62, so int64 arithmetic is exact);
larger characteristics and integer Bareiss elimination run on Python ints.
"""

from __future__ import annotations

import numpy as np

_NUMPY_P_LIMIT = 1 << 31


def gf_rref(rows, p):
    """Reduced row echelon form over GF(p).

    Args:
        rows: matrix as list of lists of ints (any representatives).
        p: prime modulus.

    Returns:
        (rref rows as list of lists with entries in [0, p), pivot column list)
    """
    if not rows or not rows[0]:
        return [list(r) for r in rows], []
    if p < _NUMPY_P_LIMIT:
        return _gf_rref_numpy(rows, p)
    return _gf_rref_python(rows, p)


def _gf_rref_numpy(rows, p):
    a = np.array(rows, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a.tolist(), pivots


def _gf_rref_python(rows, p):
    a = [[x % p for x in row] for row in rows]
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        arow = a[r]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], arow)]
        pivots.append(c)
        r += 1
    return a, pivots


def gf_rank(rows, p) -> int:
    return len(gf_rref(rows, p)[1])


def gf_nullspace(rows, p):
    """Canonical kernel basis over GF(p).

    One basis vector per free column, in column order; the free coordinate is
    1 and pivot coordinates are filled from the reduced echelon form.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = gf_rref(rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rref[i][free]) % p
        basis.append(v)
    return basis


def int_rank(rows) -> int:
    """Rank over Q of an integer matrix, by fraction-free Bareiss elimination."""
    a = [list(map(int, row)) for row in rows]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
        arc = a[r][c]
        arow = a[r]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            ai = a[i]
            if aic:
                for j in range(c + 1, ncols):
                    ai[j] = (arc * ai[j] - aic * arow[j]) // prev
                ai[c] = 0
            elif prev != arc:
                for j in range(c + 1, ncols):
                    ai[j] = arc * ai[j] // prev
        prev = arc
        r += 1
    return r


def int_det(rows) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    a = [list(map(int, row)) for row in rows]
    n = len(a)
    if n == 0:
        return 1
    assert all(len(row) == n for row in a)
    sign = 1
    prev = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        acc = a[c][c]
        arow = a[c]
        for i in range(c + 1, n):
            aic = a[i][c]
            ai = a[i]
            for j in range(c + 1, n):
                ai[j] = (acc * ai[j] - aic * arow[j]) // prev
            ai[c] = 0
        prev = acc
    return sign * a[n - 1][n - 1]
