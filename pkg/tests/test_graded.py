"""Jacobian syzygies: minimal degrees, Saito certificates, Milnor algebra."""

import pytest

from freecurve.errors import DegreeMismatch
from freecurve.fields import QQ, PrimeField
from freecurve.graded import (
    SHORTCUT_PRIME,
    global_tjurina,
    mdr,
    milnor_hilbert,
    milnor_profile,
    saito_certificate,
    syzygy_space,
)
from freecurve.poly import parse_poly, partials
from freecurve.construct import reduce_mod_prime

# curve text -> (mdr, global tjurina)
MDR_TABLE = [
    ("x^3+y^3+z^3", 2, 0),          # smooth: no syzygy below d-1
    ("x*y*z", 1, 3),                # triangle, free (1,1)
    ("x*y*z-x^3-y^3", 2, 1),        # one node
    ("x*y*(x+y)*(x+2*y)", 0, 9),    # concurrent pencil: z never appears
    ("x*y*(x+y)*z", 1, 7),          # near-pencil, free (1,2)
    ("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)", 2, 6),  # three cusps
]


def test_mdr_and_tjurina_table():
    for text, r, tau in MDR_TABLE:
        F = parse_poly(text, QQ)
        assert mdr(F) == r, text
        assert global_tjurina(F) == tau, text


def test_syzygy_space_members_kill_the_jacobian():
    F = parse_poly("x*y*z", QQ)
    fx, fy, fz = partials(F)
    vectors = syzygy_space(F, 1)
    assert len(vectors) == 2
    for v in vectors:
        a, b, c = v.components
        assert (a * fx + b * fy + c * fz).is_zero()
        assert v.degree == 1


def test_syzygy_space_empty_below_mdr():
    F = parse_poly("x^3+y^3+z^3", QQ)
    assert syzygy_space(F, 1) == []
    assert len(syzygy_space(F, 2)) > 0


def test_saito_certificate_on_the_triangle():
    F = parse_poly("x*y*z", QQ)
    rho1, rho2 = syzygy_space(F, 1)
    assert saito_certificate(F, rho1, rho2)


def test_saito_certificate_rejects_dependent_pair():
    F = parse_poly("x*y*z", QQ)
    rho1, _ = syzygy_space(F, 1)
    assert not saito_certificate(F, rho1, rho1)


def test_saito_certificate_degree_gate():
    # exponents must sum to d-1 before the determinant is even attempted
    F = parse_poly("x*y*z*(x+y)", QQ)
    vectors = syzygy_space(F, 1)
    if len(vectors) >= 2:
        with pytest.raises(DegreeMismatch):
            saito_certificate(F, vectors[0], vectors[1])


def test_milnor_profile_stabilizes_at_tau():
    for text in ("x^3+y^3+z^3", "x*y*z", "x*y*z-x^3-y^3"):
        F = parse_poly(text, QQ)
        prof = milnor_profile(F)
        assert prof.stabilized == global_tjurina(F)
        top = max(prof.dims)
        assert prof.dims[top] == prof.stabilized


def test_milnor_hilbert_smooth_curve():
    # Milnor algebra of a smooth cubic is Artinian Gorenstein with socle 3
    F = parse_poly("x^3+y^3+z^3", QQ)
    assert [milnor_hilbert(F, k) for k in range(5)] == [1, 3, 3, 1, 0]


def test_mdr_agrees_across_ground_fields():
    for text in ("x*y*z", "x*y*(x+y)*(x+2*y)", "x^3+y^3+z^3"):
        F = parse_poly(text, QQ)
        r = mdr(F)
        for p in (SHORTCUT_PRIME, 2147483497):
            assert mdr(reduce_mod_prime(F, p)) == r


def test_concurrent_pencil_has_degree_zero_syzygy():
    # all partials with respect to the missing variable vanish
    F = parse_poly("x*y*(x+y)*(x+2*y)", QQ)
    vectors = syzygy_space(F, 0)
    assert len(vectors) == 1
    a, b, c = vectors[0].components
    assert a.is_zero() and b.is_zero() and not c.is_zero()
