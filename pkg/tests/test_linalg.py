"""The two elimination backends must agree operation by operation."""

import random

from freecurve.linalg import _elim_py
from freecurve.linalg import field_det, field_nullspace, field_rank, field_rref
from freecurve.fields import QQ, PrimeField

try:
    from freecurve.linalg import _elim as _elim_c
except ImportError:  # pragma: no cover - source-only install
    _elim_c = None

import pytest

backends = pytest.mark.skipif(_elim_c is None, reason="compiled backend not built")

P = 10007


def random_matrix(rng, rows, cols, span=9):
    return [[rng.randint(-span, span) for _ in range(cols)] for _ in range(rows)]


@backends
def test_gf_operations_agree():
    rng = random.Random(1)
    for _ in range(40):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        m = [[v % P for v in row] for row in random_matrix(rng, rows, cols)]
        assert _elim_c.gf_rank(m, P) == _elim_py.gf_rank(m, P)
        assert _elim_c.gf_rref(m, P) == _elim_py.gf_rref(m, P)
        assert _elim_c.gf_nullspace(m, P) == _elim_py.gf_nullspace(m, P)


@backends
def test_int_operations_agree():
    rng = random.Random(2)
    for _ in range(40):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        m = random_matrix(rng, rows, cols)
        assert _elim_c.int_rank(m) == _elim_py.int_rank(m)
        if rows == cols:
            assert _elim_c.int_det(m) == _elim_py.int_det(m)


def test_rref_shape_is_canonical():
    rref, pivots = _elim_py.gf_rref([[2, 4, 6], [1, 2, 4]], P)
    # pivot columns carry a unit pivot and zeros elsewhere
    for i, j in enumerate(pivots):
        assert rref[i][j] == 1
        for k in range(len(rref)):
            if k != i:
                assert rref[k][j] == 0
    assert pivots == sorted(pivots)


def test_nullspace_is_a_kernel_basis():
    m = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    basis = _elim_py.gf_nullspace(m, P)
    assert len(basis) == 4 - _elim_py.gf_rank(m, P)
    for vec in basis:
        for row in m:
            assert sum(a * b for a, b in zip(row, vec)) % P == 0


def test_int_rank_handles_large_pivgrowth():
    # Hilbert-like matrix scaled to integers: full rank despite huge entries
    n = 6
    scale = 1
    for k in range(1, 2 * n):
        scale *= k
    m = [[scale // (i + j + 1) for j in range(n)] for i in range(n)]
    assert _elim_py.int_rank(m) == n


def test_int_det_multiplicativity():
    rng = random.Random(3)
    for _ in range(15):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n, 5)
        b = random_matrix(rng, n, n, 5)
        ab = [
            [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert _elim_py.int_det(ab) == _elim_py.int_det(a) * _elim_py.int_det(b)


def test_field_elimination_matches_integer_backend():
    rng = random.Random(4)
    for _ in range(20):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = random_matrix(rng, rows, cols)
        over_q = [[QQ.from_int(v) for v in row] for row in m]
        assert field_rank(over_q, QQ) == _elim_py.int_rank(m)
        if rows == cols:
            det = field_det(over_q, QQ)
            assert int(det) == _elim_py.int_det(m)


def test_field_nullspace_over_prime_field():
    k = PrimeField(13)
    m = [[k.from_int(v) for v in row] for row in [[1, 2, 3], [2, 4, 6]]]
    basis = field_nullspace(m, k)
    assert len(basis) == 2
    for vec in basis:
        for row in m:
            acc = k.zero
            for a, b in zip(row, vec):
                acc = k.add(acc, k.mul(a, b))
            assert k.is_zero(acc)
