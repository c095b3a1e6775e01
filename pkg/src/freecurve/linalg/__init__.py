"""Exact linear algebra kernels with a compiled core and a pure fallback.

The hot operations — prime-field row reduction and fraction-free integer
(Bareiss) elimination — exist twice: ``_elim`` (Cython) and ``_elim_py``
(numpy / pure Python).  The compiled module is preferred when importable;
``FREECURVE_LINALG_BACKEND=py`` or ``=c`` forces a choice.  Both backends are
deterministic (first-nonzero pivoting in column order) and agree bit-for-bit;
``benchmarks/bench_elim.py`` compares their speed.

Generic elimination over an arbitrary field object (used for extension fields
and exact rational kernels, where matrices are small) lives here directly.
"""

from __future__ import annotations

import os

_choice = os.environ.get("FREECURVE_LINALG_BACKEND", "").strip().lower()
if _choice == "py":
    from . import _elim_py as _backend

    BACKEND = "py"
elif _choice == "c":
    from . import _elim as _backend  # type: ignore[attr-defined]

    BACKEND = "c"
else:
    try:
        from . import _elim as _backend  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from . import _elim_py as _backend

        BACKEND = "py"

gf_rref = _backend.gf_rref
gf_rank = _backend.gf_rank
gf_nullspace = _backend.gf_nullspace
int_rank = _backend.int_rank
int_det = _backend.int_det

__all__ = [
    "BACKEND",
    "gf_rref",
    "gf_rank",
    "gf_nullspace",
    "int_rank",
    "int_det",
    "field_rref",
    "field_rank",
    "field_nullspace",
    "field_det",
]


def field_rref(rows, field):
    """Reduced row echelon form over an arbitrary field.

    Returns (rref rows, pivot columns).  Deterministic: first nonzero pivot
    in column order.
    """
    a = [list(row) for row in rows]
    if not a or not a[0]:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next(
            (i for i in range(r, nrows) if not field.is_zero(a[i][c])), None
        )
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, x) for x in a[r]]
        arow = a[r]
        for i in range(nrows):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [
                    field.sub(x, field.mul(f, y)) for x, y in zip(a[i], arow)
                ]
        pivots.append(c)
        r += 1
    return a, pivots


def field_rank(rows, field) -> int:
    return len(field_rref(rows, field)[1])


def field_nullspace(rows, field):
    """Canonical kernel basis (one vector per free column, in column order)."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = field_rref(rows, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for i, c in enumerate(pivots):
            v[c] = field.neg(rref[i][free])
        basis.append(v)
    return basis


def field_det(rows, field):
    """Determinant over an arbitrary field (Gaussian elimination)."""
    a = [list(row) for row in rows]
    n = len(a)
    if n == 0:
        return field.one
    assert all(len(row) == n for row in a)
    det = field.one
    for c in range(n):
        pivot = next(
            (i for i in range(c, n) if not field.is_zero(a[i][c])), None
        )
        if pivot is None:
            return field.zero
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = field.neg(det)
        det = field.mul(det, a[c][c])
        inv = field.inv(a[c][c])
        arow = [field.mul(inv, x) for x in a[c]]
        a[c] = arow
        for i in range(c + 1, n):
            if not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [
                    field.sub(x, field.mul(f, y)) for x, y in zip(a[i], arow)
                ]
    return det
