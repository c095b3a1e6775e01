"""Homogeneous polynomial layer: parsing, calculus identities, restrictions."""

import pytest
from hypothesis import given, settings, strategies as st

from freecurve.errors import NotHomogeneous, ParseError
from freecurve.fields import QQ, Extension, PrimeField
from freecurve.poly import (
    Poly,
    binary_roots,
    discriminant_binary,
    hessian,
    line_through,
    linear_form_through_points,
    monic_lead,
    parse_poly,
    partials,
    polar,
    resultant,
    restrict_to_line,
    squarefree_part,
    translate_to_origin,
)

XYZ = ("x", "y", "z")


def pt(*ints):
    return tuple(QQ.from_int(i) for i in ints)


@st.composite
def homogeneous(draw):
    d = draw(st.integers(1, 4))
    terms = {}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            c = draw(st.integers(-5, 5))
            if c:
                terms[(i, j, d - i - j)] = c
    if not terms:
        terms[(d, 0, 0)] = 1
    return Poly.from_integer_terms(QQ, XYZ, terms)


@given(homogeneous())
@settings(max_examples=120, deadline=None)
def test_euler_identity(F):
    d = F.degree()
    fx, fy, fz = partials(F)
    x, y, z = (parse_poly(v, QQ) for v in XYZ)
    assert (x * fx + y * fy + z * fz) == F.scale(QQ.from_int(d))


@given(homogeneous(), homogeneous())
@settings(max_examples=40, deadline=None)
def test_product_degrees(F, G):
    H = F * G
    assert H.degree() == F.degree() + G.degree()
    assert H.is_homogeneous()


def test_parse_round_trip():
    for text in ("x^3+y^3+z^3", "x*y*z", "x^2*y-2*x*y^2+y^3", "(x+y)*(x-y)*z"):
        F = parse_poly(text, QQ)
        again = parse_poly(F.to_text(), QQ)
        assert again == F


def test_parse_rejects_inhomogeneous():
    with pytest.raises(NotHomogeneous):
        parse_poly("x^2+y", QQ)
    # explicit opt-out admits it
    parse_poly("x^2+y", QQ, homogeneous=False)


def test_parse_rejects_garbage():
    for text in ("x^", "x**2", "3 +", "w^2", "x^(2)"):
        with pytest.raises(ParseError):
            parse_poly(text, QQ)


def test_fermat_cubic_hessian():
    F = parse_poly("x^3+y^3+z^3", QQ)
    assert hessian(F) == parse_poly("216*x*y*z", QQ)


def test_cone_hessian_vanishes():
    # a cone over a binary form has degenerate second fundamental form
    F = parse_poly("x^2*y", QQ)
    assert hessian(F).is_zero()


def test_polar_is_directional_derivative():
    F = parse_poly("x^3+y^3+z^3", QQ)
    q = pt(1, 2, 0)
    fx, fy, fz = partials(F)
    want = fx.scale(q[0]) + fy.scale(q[1]) + fz.scale(q[2])
    assert polar(F, q) == want


def test_translate_chart_inverts():
    F = parse_poly("x^3+y^3+z^3", QQ)
    p = pt(1, -1, 0)
    chart = translate_to_origin(F, p)
    assert QQ.is_zero(chart.germ.coefficient((0, 0)))
    line = chart.line_to_global(QQ.one, QQ.from_int(2))
    assert line.degree() == 1
    assert QQ.is_zero(line.evaluate(p))


def test_restriction_and_binary_roots():
    F = parse_poly("x^3+y^3+z^3", QQ)
    R = restrict_to_line(F, pt(1, -1, 0), pt(0, 0, 1))
    assert R.to_text() == "v^3"
    pairs, residual = binary_roots(R)
    assert [(QQ.to_str(a), QQ.to_str(b), m) for (a, b), m in pairs] == [("1", "0", 3)]
    assert residual.degree() == 0

    # u^2+v^2 stays irreducible over Q but splits over Q(i)
    qi = Extension(QQ, "t^2+1")
    form = parse_poly("x^2+y^2", QQ, vars=("x", "y"))
    pairs, residual = binary_roots(form)
    assert not pairs and residual.degree() == 2
    form_i = parse_poly("x^2+y^2", qi, vars=("x", "y"))
    pairs, residual = binary_roots(form_i)
    assert len(pairs) == 2 and residual.degree() == 0


def test_resultant_multiplicative_in_each_slot():
    F = parse_poly("x^2+y*z", QQ)
    G = parse_poly("x+z", QQ)
    H = parse_poly("x-y", QQ)
    lhs = resultant(F, G * H, "x")
    rhs = resultant(F, G, "x") * resultant(F, H, "x")
    assert lhs == rhs


def test_resultant_of_coprime_lines_is_unit():
    G = parse_poly("x+z", QQ)
    H = parse_poly("x-y", QQ)
    R = resultant(G, H, "x")
    assert R.degree() == 1  # -y - z, never identically zero
    assert not R.is_zero()


def test_discriminant_binary_quadratic():
    # a*u^2 + b*u*v + c*v^2 -> b^2 - 4*a*c up to the fixed normalization
    g = parse_poly("u^2-5*u*v+6*v^2", QQ, vars=("u", "v"))
    disc = discriminant_binary(g)
    assert disc.degree() == 0
    assert not disc.is_zero()
    double = parse_poly("u^2-4*u*v+4*v^2", QQ, vars=("u", "v"))
    assert discriminant_binary(double).is_zero()


def test_squarefree_part_of_power_product():
    F = parse_poly("x+y", QQ, vars=("x", "y"))
    G = parse_poly("x-2*y", QQ, vars=("x", "y"))
    H = squarefree_part(F * F * G)
    assert monic_lead(H) == monic_lead(F * G)


def test_line_through_and_linear_form():
    a, b, c = line_through(QQ, pt(1, 0, 0), pt(0, 1, 0))
    # the line z = 0
    assert (QQ.to_str(a), QQ.to_str(b)) == ("0", "0") and not QQ.is_zero(c)
    form = linear_form_through_points(QQ, pt(1, 0, 0), pt(0, 1, 0))
    assert form.degree() == 1
    assert QQ.is_zero(form.evaluate(pt(1, 0, 0)))
    assert QQ.is_zero(form.evaluate(pt(0, 1, 0)))


def test_min_degree_and_components():
    f = parse_poly("x^2+x^3", QQ, homogeneous=False)
    assert f.min_degree() == 2
    assert f.total_degree() == 3
    assert f.homogeneous_component(2) == parse_poly("x^2", QQ, homogeneous=False)
