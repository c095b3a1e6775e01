"""Germ invariants against the classical singularity tables."""

import random

import pytest

from freecurve.errors import CommonComponent, LineComponent, NotIsolated, NotOnCurve
from freecurve.fields import QQ, Extension, PrimeField
from freecurve.local import (
    check_milnor_union,
    colength,
    hessian_contact,
    intersection_multiplicity,
    is_quasi_homogeneous,
    local_report,
    milnor_number,
    multiplicity,
    tangent_cone,
    tangential_multiplicity,
    tjurina_local,
)
from freecurve.poly import XY, Poly, parse_poly

QI = Extension(QQ, "t^2+1")


def germ(text, field=QQ):
    return parse_poly(text, field, vars=XY, homogeneous=False)


# germ, (multiplicity, milnor, tjurina): the standard simple types, one
# representative each, plus the smallest classical mu > tau example
GERM_TABLE = [
    ("x*y", (2, 1, 1), True),            # A1
    ("y^2+x^3", (2, 2, 2), True),        # A2
    ("y^2+x^4", (2, 3, 3), True),        # A3
    ("y^2+x^5", (2, 4, 4), True),        # A4
    ("x^3+y^3", (3, 4, 4), True),        # D4
    ("y*(x^2+y^3)", (3, 5, 5), True),    # D5
    ("x^3+y^4", (3, 6, 6), True),        # E6
    ("x*(x^2+y^3)", (3, 7, 7), True),    # E7
    ("x^3+y^5", (3, 8, 8), True),        # E8
    ("x^5+x^2*y^2+y^5", (4, 11, 10), False),
]


def test_simple_singularity_table():
    for text, (m, mu, tau), qh in GERM_TABLE:
        f = germ(text)
        assert multiplicity(f) == m, text
        assert milnor_number(f) == mu, text
        assert tjurina_local(f) == tau, text
        assert is_quasi_homogeneous(f) == qh, text
        assert tau <= mu


def test_smooth_germ_invariants():
    f = germ("y+x^2")
    assert multiplicity(f) == 1
    assert milnor_number(f) == 0
    assert tjurina_local(f) == 0


def test_tangent_cone_of_split_germs():
    lines = [line.to_text() for line, a in tangent_cone(germ("x*y"))]
    assert sorted(lines) == ["x", "y"]
    cusp = tangent_cone(germ("y^2+x^3"))
    assert [(line.to_text(), a) for line, a in cusp] == [("y", 2)]


def test_tangential_multiplicity():
    # the cusp meets its tangent line to order 3, the node each branch to 2
    assert tangential_multiplicity(germ("y^2+x^3"), germ("y")) == 3
    assert tangential_multiplicity(germ("x*y+x^3+y^3"), germ("y")) == 2
    with pytest.raises(LineComponent):
        tangential_multiplicity(germ("y*(y+x^2)"), germ("y"))


def staircase(a, b):
    # brute count of monomials outside the staircase of (x^a, y^b)
    return sum(1 for i in range(a) for j in range(b))


def test_colength_monomial_oracle():
    for a in (1, 2, 3):
        for b in (1, 2, 4):
            gens = [germ(f"x^{a}"), germ(f"y^{b}")]
            assert colength(QQ, gens, cap=30) == staircase(a, b) == a * b
    gens = [germ("x^2"), germ("x*y"), germ("y^3")]
    assert colength(QQ, gens, cap=30) == 4  # basis 1, x, y, y^2


def test_colength_seed_never_changes_the_value():
    gens = [germ("x^2+y^3"), germ("y^2+x^3")]
    want = colength(QQ, gens, cap=30)
    for start in (2, 3, 5, 9):
        assert colength(QQ, gens, cap=30, start=start) == want


def test_colength_detects_non_isolated():
    with pytest.raises(NotIsolated):
        colength(QQ, [germ("x^2")], cap=20)


INTERSECTION_PINS = [
    ("y^2-x^3", "y", 3),
    ("y^2-x^3", "x", 2),
    ("y", "x", 1),
    ("y^2-x^3", "y^2+x^3", 6),  # the pair generates (y^2, x^3)
    ("x^2+y^2", "x^2-y^2", 4),
]


def test_intersection_pins():
    for f, g, want in INTERSECTION_PINS:
        assert intersection_multiplicity(germ(f), germ(g)) == want


def test_intersection_is_symmetric_and_additive():
    rng = random.Random(9)
    f = germ("y^2-x^3")
    g = germ("x+y^2")
    h = germ("x-y")
    assert intersection_multiplicity(f, g) == intersection_multiplicity(g, f)
    assert intersection_multiplicity(f, g * h) == intersection_multiplicity(
        f, g
    ) + intersection_multiplicity(f, h)


def test_intersection_shared_component():
    with pytest.raises(CommonComponent):
        intersection_multiplicity(germ("x*y"), germ("x*(x+y)"))


def test_intersection_matches_plain_colength():
    # the routed computation agrees with the defining colength
    rng = random.Random(17)
    trials = 0
    while trials < 25:
        terms = {}
        for e1 in range(3):
            for e2 in range(3 - e1):
                if (e1, e2) != (0, 0) and rng.random() < 0.7:
                    c = rng.randint(-3, 3)
                    if c:
                        terms[(e1, e2)] = c
        if not terms:
            continue
        f = Poly.from_integer_terms(QQ, XY, terms)
        g = germ(rng.choice(["y^2-x^3", "x*y+x^3", "x+y^2", "x^2-y^2"]))
        try:
            want = colength(QQ, [f, g], cap=40)
        except NotIsolated:
            continue
        assert intersection_multiplicity(f, g) == want
        trials += 1


def test_hessian_contact_pins():
    cusp = parse_poly("z*y^2-x^3", QQ)
    node = parse_poly("z*x*y+x^3+y^3", QQ)
    origin = tuple(QQ.from_int(v) for v in (0, 0, 1))
    assert hessian_contact(cusp, origin) == 8
    assert hessian_contact(node, origin) == 6
    # at a smooth flex the contact order is the inflection order
    fermat = parse_poly("x^3+y^3+z^3", QQ)
    flex = tuple(QQ.from_int(v) for v in (1, -1, 0))
    assert hessian_contact(fermat, flex) == 1


def test_hessian_contact_rejects_off_curve_points():
    fermat = parse_poly("x^3+y^3+z^3", QQ)
    with pytest.raises(NotOnCurve):
        hessian_contact(fermat, tuple(QQ.from_int(v) for v in (1, 1, 1)))


def test_hessian_contact_line_component():
    F = parse_poly("y*(x^2+y^2-z^2)", QQ)  # line y=0 is a component
    p = tuple(QQ.from_int(v) for v in (1, 0, 1))
    with pytest.raises(CommonComponent):
        hessian_contact(F, p)


def test_milnor_union_formula():
    for f, g in [("y^2-x^3", "x"), ("x", "y"), ("y-x^2", "y+x^2")]:
        assert check_milnor_union(germ(f), germ(g))


def test_local_report_cusp():
    cusp = parse_poly("z*y^2-x^3", QQ)
    rep = local_report(cusp, tuple(QQ.from_int(v) for v in (0, 0, 1)))
    assert (rep.mult, rep.mu, rep.tau_local, rep.kappa) == (2, 2, 2, 3)
    assert rep.quasi_homogeneous and rep.split
    assert rep.hessian_contact == 8
    assert [(line.to_text(), a, mL) for line, a, mL in rep.tangent_cone] == [("y", 2, 3)]


def test_local_report_json_shape():
    cusp = parse_poly("z*y^2-x^3", QQ)
    rep = local_report(cusp, tuple(QQ.from_int(v) for v in (0, 0, 1)))
    blob = rep.to_json(QQ)
    assert blob["point"] == ["0", "0", "1"]
    assert blob["mult"] == 2 and blob["tau"] == 2
    assert blob["hessian_contact"] == 8


def test_extension_field_germ():
    # node with tangent lines rational only over Q(i)
    f = germ("x^2+y^2+x^3", QI)
    assert milnor_number(f) == 1
    cone = tangent_cone(f)
    assert len(cone) == 2
