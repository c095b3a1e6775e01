# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels.

Same four entry points as ``_elim_py``: prime-field rref/rank/nullspace and
integer Bareiss rank/determinant.  Prime-field arithmetic runs on C integers
(64-bit products for p < 2^31, 128-bit for larger moduli up to 2^62); Bareiss
keeps Python objects for the entries (they are arbitrary-precision integers)
but drives the loops from C.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64
ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline i64 _mulmod_small(i64 a, i64 b, i64 p) nogil:
    return (a * b) % p


cdef inline i64 _mulmod_big(i64 a, i64 b, i64 p) nogil:
    cdef u128 prod = (<u128> (<u64> a)) * (<u128> (<u64> b))
    return <i64> (prod % (<u128> (<u64> p)))


cdef i64 _invmod(i64 a, i64 p, bint big):
    cdef i64 result = 1
    cdef i64 base = a % p
    cdef i64 e = p - 2
    while e:
        if e & 1:
            result = _mulmod_big(result, base, p) if big else _mulmod_small(result, base, p)
        base = _mulmod_big(base, base, p) if big else _mulmod_small(base, base, p)
        e >>= 1
    return result


cdef _gf_rref_core(object rows, i64 p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef bint big = p >= (<i64> 1) << 31
    cdef i64 *a = <i64 *> malloc(nrows * ncols * sizeof(i64))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, r, pivot
    cdef i64 v, inv, f
    cdef object row
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                v = <i64> (row[j] % p)
                a[i * ncols + j] = v
        pivots = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            pivot = -1
            for i in range(r, nrows):
                if a[i * ncols + c] != 0:
                    pivot = i
                    break
            if pivot < 0:
                continue
            if pivot != r:
                for j in range(ncols):
                    v = a[r * ncols + j]
                    a[r * ncols + j] = a[pivot * ncols + j]
                    a[pivot * ncols + j] = v
            inv = _invmod(a[r * ncols + c], p, big)
            if big:
                for j in range(ncols):
                    a[r * ncols + j] = _mulmod_big(a[r * ncols + j], inv, p)
                for i in range(nrows):
                    if i != r:
                        f = a[i * ncols + c]
                        if f != 0:
                            for j in range(ncols):
                                v = a[i * ncols + j] - _mulmod_big(f, a[r * ncols + j], p)
                                a[i * ncols + j] = v + p if v < 0 else v
            else:
                for j in range(ncols):
                    a[r * ncols + j] = _mulmod_small(a[r * ncols + j], inv, p)
                for i in range(nrows):
                    if i != r:
                        f = a[i * ncols + c]
                        if f != 0:
                            for j in range(ncols):
                                v = a[i * ncols + j] - _mulmod_small(f, a[r * ncols + j], p)
                                a[i * ncols + j] = v + p if v < 0 else v
            pivots.append(c)
            r += 1
        out = [[a[i * ncols + j] for j in range(ncols)] for i in range(nrows)]
        return out, pivots
    finally:
        free(a)


def gf_rref(rows, p):
    """Reduced row echelon form over GF(p); returns (rows, pivot columns)."""
    if not rows or not rows[0]:
        return [list(r) for r in rows], []
    return _gf_rref_core(rows, <i64> p)


def gf_rank(rows, p):
    if not rows or not rows[0]:
        return 0
    return len(_gf_rref_core(rows, <i64> p)[1])


def gf_nullspace(rows, p):
    """Canonical kernel basis over GF(p) (one vector per free column)."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = gf_rref(rows, p)
    pivot_set = set(pivots)
    basis = []
    for free_col in range(ncols):
        if free_col in pivot_set:
            continue
        v = [0] * ncols
        v[free_col] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rref[i][free_col]) % p
        basis.append(v)
    return basis


def int_rank(rows):
    """Rank over Q of an integer matrix (fraction-free Bareiss)."""
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(a)
    cdef Py_ssize_t ncols = len(a[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0
    cdef Py_ssize_t i, j, c, r, pivot
    cdef object prev = 1
    cdef object arc, aic
    cdef list arow, ai
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = -1
        for i in range(r, nrows):
            if a[i][c] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
        arow = a[r]
        arc = arow[c]
        for i in range(r + 1, nrows):
            ai = a[i]
            aic = ai[c]
            if aic != 0:
                for j in range(c + 1, ncols):
                    ai[j] = (arc * ai[j] - aic * arow[j]) // prev
                ai[c] = 0
            elif prev != arc:
                for j in range(c + 1, ncols):
                    ai[j] = arc * ai[j] // prev
        prev = arc
        r += 1
    return r


def int_det(rows):
    """Determinant of a square integer matrix (Bareiss)."""
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t n = len(a)
    if n == 0:
        return 1
    cdef Py_ssize_t i, j, c, pivot
    cdef int sign = 1
    cdef object prev = 1
    cdef object acc, aic
    cdef list arow, ai
    for c in range(n):
        pivot = -1
        for i in range(c, n):
            if a[i][c] != 0:
                pivot = i
                break
        if pivot < 0:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        arow = a[c]
        acc = arow[c]
        for i in range(c + 1, n):
            ai = a[i]
            aic = ai[c]
            for j in range(c + 1, n):
                ai[j] = (acc * ai[j] - aic * arow[j]) // prev
            ai[c] = 0
        prev = acc
    return sign * a[n - 1][n - 1]
