"""Inflection census, pencil restriction, and the modular-point decision.

The inflection side counts contact with the Hessian curve: the order of a
flex at a smooth point, the aggregate count 3d(d-2) minus the contact spent at
singular points, and per-line tallies.

The supersolvability side works with the pencil of lines through a point p.
Restricting F to the parameterized pencil gives one binary form g(u,v) with
coefficients in the parameters; p is a modular point precisely when every
line with extra contact at p (a root of T, the section of g at p) or a
repeated intersection anywhere (a root of the pencil discriminant D) is a
component of the curve.  That turns the defining quantifier over all lines
into one exact divisibility of binary forms, with no factorization over the
closure; failures produce a concrete witness line whenever the offending
factor has a rational root.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import univariate as uni
from .errors import (
    LineComponent,
    NotOnCurve,
    NotReduced,
    OutOfRange,
    SingularPoint,
)
from .linalg import field_det
from .local import hessian_contact, multiplicity
from .poly import (
    Poly,
    UV,
    binary_gcd,
    binary_roots,
    linear_form_through_points,
    monic_lead,
    restrict_to_line,
    squarefree_part,
    translate_to_origin,
)

__all__ = [
    "FlexReport",
    "ModularityReport",
    "PencilForm",
    "tangent_line_at",
    "inflection_order",
    "total_inflection",
    "line_inflection",
    "pencil_through_point",
    "is_modular_point",
    "is_supersolvable",
    "euler_mu_identity",
]

UVAB = ("u", "v", "a", "b")
AB = ("a", "b")


def tangent_line_at(F: Poly, p) -> Poly:
    """Global tangent line at a smooth point of the curve."""
    field = F.field
    chart = translate_to_origin(F, p)
    f = chart.germ
    if f.is_zero() or not field.is_zero(f.coefficient((0, 0))):
        raise NotOnCurve("point does not lie on the curve")
    if f.min_degree() != 1:
        raise SingularPoint("tangent line needs a smooth point")
    a = f.coefficient((1, 0))
    b = f.coefficient((0, 1))
    line = chart.line_to_global(a, b)
    e, c = line.lead()
    return line.scale(field.inv(c))


def _second_point_on_line(field, line: Poly, p):
    """A deterministic point of the line distinct from p (projectively)."""
    coeffs = [
        line.coefficient((1, 0, 0)),
        line.coefficient((0, 1, 0)),
        line.coefficient((0, 0, 1)),
    ]
    candidates = []
    for i in range(3):
        for j in range(i + 1, 3):
            # intersection with the coordinate line x_k = 0, k != i, j
            pt = [field.zero] * 3
            pt[i] = coeffs[j]
            pt[j] = field.neg(coeffs[i])
            if any(not field.is_zero(c) for c in pt):
                candidates.append(tuple(pt))
    for q in candidates:
        # reject projective equality with p: all 2x2 minors vanish
        minors = [
            field.sub(field.mul(p[i], q[j]), field.mul(p[j], q[i]))
            for i in range(3)
            for j in range(i + 1, 3)
        ]
        if any(not field.is_zero(m) for m in minors):
            return q
    raise AssertionError("degenerate line")


def inflection_order(F: Poly, p) -> int:
    """Order of inflection at a smooth point: contact with the Hessian.

    Cross-checked against the tangent-line contact (C, T_pC)_p - 2.  Raises
    SingularPoint off the smooth locus and LineComponent when the tangent is
    a component (infinite order).
    """
    field = F.field
    tangent = tangent_line_at(F, p)
    if tangent.divides(F):
        raise LineComponent(
            f"tangent {tangent.to_text()} is a component of the curve"
        )
    contact = hessian_contact(F, p)
    # tangent-line contact: order of the restriction at the parameter of p
    s = _second_point_on_line(field, tangent, p)
    restr = restrict_to_line(F, p, s)
    # p sits at (u, v) = (1, 0); its contact is the power of v dividing
    t_contact = min(e[1] for e in restr.terms)
    assert contact == t_contact - 2, (contact, t_contact)
    return contact


@dataclass
class FlexReport:
    """Aggregate inflection census of a curve."""

    total: int
    per_point: list  # (point, order) at supplied flex points
    per_line: list  # (line text, i(L)) when lines are supplied
    bound: int
    equality_case: bool

    def to_json(self, field) -> dict:
        return {
            "total": self.total,
            "per_point": [
                {"point": [field.to_str(c) for c in p], "order": k}
                for p, k in self.per_point
            ],
            "per_line": [
                {"line": line, "count": k} for line, k in self.per_line
            ],
            "bound": self.bound,
            "equality_case": self.equality_case,
        }


def total_inflection(F: Poly, singular_points, flex_points=()) -> FlexReport:
    """i(C) = 3d(d-2) - sum of Hessian contact over the singular points.

    ``singular_points`` must be the complete singular locus (caller attests).
    Supplied flex points get their individual orders in the report.
    """
    d = F.degree()
    total = 3 * d * (d - 2)
    histogram: dict[int, int] = {}
    for p in singular_points:
        total -= hessian_contact(F, p)
        germ = translate_to_origin(F, p).germ
        m = multiplicity(germ)
        histogram[m] = histogram.get(m, 0) + 1
    bound = 3 * d * (d - 2)
    for k, n_k in histogram.items():
        bound -= 3 * k * (k - 1) * n_k
    per_point = [(tuple(p), inflection_order(F, p)) for p in flex_points]
    return FlexReport(
        total=total,
        per_point=per_point,
        per_line=[],
        bound=bound,
        equality_case=(total == bound),
    )


def line_inflection(F: Poly, line: Poly, flex_points_on_line) -> int:
    """i(L): total order of the supplied flexes whose tangent is the line."""
    field = F.field
    if line.divides(F):
        raise LineComponent("line is a component of the curve")
    total = 0
    for p in flex_points_on_line:
        assert field.is_zero(line.evaluate(p)), "flex point must lie on the line"
        tangent = tangent_line_at(F, p)
        if _proportional(tangent, line):
            total += inflection_order(F, p)
    # distinct intersection points of the line with the curve, counted
    # geometrically: the squarefree part of the restriction
    s = _second_point_on_line(field, line, _anchor_point(field, line))
    restr = restrict_to_line(F, _anchor_point(field, line), s)
    distinct = squarefree_part(restr).degree()
    assert total <= F.degree() - 2 * distinct
    return total


def _anchor_point(field, line: Poly):
    coeffs = [
        line.coefficient((1, 0, 0)),
        line.coefficient((0, 1, 0)),
        line.coefficient((0, 0, 1)),
    ]
    for i in range(3):
        for j in range(i + 1, 3):
            pt = [field.zero] * 3
            pt[i] = coeffs[j]
            pt[j] = field.neg(coeffs[i])
            if any(not field.is_zero(c) for c in pt):
                return tuple(pt)
    raise AssertionError("zero line")


def _proportional(l1: Poly, l2: Poly) -> bool:
    field = l1.field
    e1, c1 = l1.lead()
    e2, c2 = l2.lead()
    if e1 != e2:
        return False
    return (l1.scale(c2) - l2.scale(c1)).is_zero()


# ---------------------------------------------------------------------------
# pencil of lines through a point
# ---------------------------------------------------------------------------


class PencilForm:
    """Restriction of F to the parameterized pencil of lines through p.

    With p moved to the third coordinate point, the line with parameter
    (alpha : beta) is {alpha x + beta y = 0}, traced by
    u (beta, -alpha, 0) + v p.  The full restriction is u^m times ``g``
    where m = mult_p; ``g`` lives in (u, v, a, b) with (a, b) the pencil
    parameters, and its coefficient at u^j v^(n-j) is homogeneous of degree
    j + m in the parameters.
    """

    def __init__(self, field, p, axis, locs, g: Poly, m: int, n: int):
        self.field = field
        self.point = tuple(p)
        self.axis = axis
        self.locs = locs
        self.g = g
        self.m = m
        self.n = n

    def direction_point(self, alpha, beta):
        """The point of the parameter-(alpha:beta) line away from p."""
        field = self.field
        pt = [field.zero] * 3
        pt[self.locs[0]] = beta
        pt[self.locs[1]] = field.neg(alpha)
        return tuple(pt)

    def line_form(self, alpha, beta) -> Poly:
        """Global linear form of the parameter-(alpha:beta) line."""
        return linear_form_through_points(
            self.field, self.point, self.direction_point(alpha, beta)
        )

    def specialize(self, alpha, beta) -> Poly:
        """The binary form g(u, v) on the line with parameter (alpha:beta)."""
        field = self.field
        terms: dict = {}
        for (eu, ev, ea, eb), c in self.g.terms.items():
            v = field.mul(
                c,
                field.mul(field.pow(alpha, ea), field.pow(beta, eb)),
            )
            key = (eu, ev)
            s = field.add(terms.get(key, field.zero), v)
            if field.is_zero(s):
                terms.pop(key, None)
            else:
                terms[key] = s
        return Poly(field, UV, terms)


def pencil_through_point(F: Poly, p) -> PencilForm:
    """Restrict F to the pencil of lines through p and strip the forced
    u^(mult_p) factor."""
    field = F.field
    axis = max(i for i in range(3) if not field.is_zero(p[i]))
    locs = tuple(i for i in range(3) if i != axis)
    images = []
    for l in range(3):
        terms: dict = {}
        if l == locs[0]:
            terms[(1, 0, 0, 1)] = field.one  # b * u
        elif l == locs[1]:
            terms[(1, 0, 1, 0)] = field.neg(field.one)  # -a * u
        if not field.is_zero(p[l]):
            terms[(0, 1, 0, 0)] = field.add(
                terms.get((0, 1, 0, 0), field.zero), p[l]
            )
        images.append(Poly(field, UVAB, terms))
    G = F.compose(images)
    m = min(e[0] for e in G.terms)
    g = Poly(
        field,
        UVAB,
        {(e[0] - m, e[1], e[2], e[3]): c for e, c in G.terms.items()},
    )
    return PencilForm(field, p, axis, locs, g, m, F.degree() - m)


def _pencil_section(form: PencilForm) -> Poly:
    """T(a, b): the u^0-coefficient of g — lines with extra contact at p."""
    field = form.field
    terms = {}
    for (eu, ev, ea, eb), c in form.g.terms.items():
        if eu == 0:
            terms[(ea, eb)] = c
    return Poly(field, AB, terms)


def _pencil_discriminant(form: PencilForm) -> Poly:
    """D(a, b) = Res(g_u, g_v): parameters whose line meets the residual
    curve with a repeated intersection somewhere.

    The coefficient weights make D homogeneous of degree exactly
    (n-1)(n+2m); it is recovered from that many scalar resultant samples by
    interpolation, avoiding determinants over a polynomial ring.
    """
    field = form.field
    n, m = form.n, form.m
    if n <= 1:
        return Poly.const(field, AB, field.one)
    N = (n - 1) * (n + 2 * m)
    if field.char and field.char <= N + 2:
        raise OutOfRange(
            f"pencil discriminant needs characteristic above {N + 2}"
        )
    xs, ys = [], []
    for s in range(N + 2):
        sv = field.from_int(s)
        gs = form.specialize(field.one, sv)
        ys.append(_binary_disc_value(field, gs, n))
        xs.append(sv)
    coeffs = uni.interpolate(field, xs[: N + 1], ys[: N + 1])
    # one extra sample guards the interpolation
    assert field.eq(uni.evaluate(field, coeffs, xs[N + 1]), ys[N + 1])
    terms = {}
    for k, c in enumerate(coeffs):
        if not field.is_zero(c):
            terms[(N - k, k)] = c
    return Poly(field, AB, terms)


def _binary_disc_value(field, g: Poly, n: int):
    """Res(g_u, g_v) of a scalar binary form of (formal) degree n."""
    cu = [field.zero] * n
    cv = [field.zero] * n
    for (eu, ev), c in g.terms.items():
        if eu >= 1:
            cu[eu - 1] = field.add(
                cu[eu - 1], field.mul(field.from_int(eu), c)
            )
        if ev >= 1:
            cv[eu] = field.add(cv[eu], field.mul(field.from_int(ev), c))
    size = 2 * (n - 1)
    rows = []
    for k in range(n - 1):
        row = [field.zero] * size
        for j, c in enumerate(reversed(cu)):
            row[k + j] = c
        rows.append(row)
    for k in range(n - 1):
        row = [field.zero] * size
        for j, c in enumerate(reversed(cv)):
            row[k + j] = c
        rows.append(row)
    return field_det(rows, field)


def _component_line_form(F_moved_slices, field) -> Poly:
    """Binary gcd of the z-slices: the product of the line factors through
    the pencil center (in moved coordinates)."""
    G = None
    for slice_poly in F_moved_slices:
        if slice_poly.is_zero():
            continue
        G = slice_poly if G is None else binary_gcd(G, slice_poly)
        if G.total_degree() == 0:
            break
    assert G is not None
    return G


@dataclass
class ModularityReport:
    """Decision and certificate for the modular-point condition at p."""

    point: tuple
    is_modular: bool
    mult: int
    component_lines: list  # global line texts through p belonging to C
    component_residual: str | None  # unsplit bundle factor, if any
    witness_line: str | None
    witness_factor: str | None

    def to_json(self, field) -> dict:
        return {
            "point": [field.to_str(c) for c in self.point],
            "is_modular": self.is_modular,
            "mult": self.mult,
            "component_lines": self.component_lines,
            "component_residual": self.component_residual,
            "witness_line": self.witness_line,
            "witness_factor": self.witness_factor,
        }


def is_modular_point(F: Poly, p) -> ModularityReport:
    """Decide whether every line through p not contained in C meets C with
    multiplicity mult_p at p and simply everywhere else.

    Certificate: with T and D as above, the bad-line locus is the zero set
    of T*D; p is modular iff its squarefree part divides the parameter form
    of the component lines through p.  The leftover factor supplies a
    witness line when it has a rational root.
    """
    field = F.field
    form = pencil_through_point(F, p)
    T = _pencil_section(form)
    D = _pencil_discriminant(form)
    if D.is_zero():
        raise NotReduced("pencil discriminant vanishes identically")
    # component lines through p, in moved coordinates: binary gcd of the
    # slices of F along powers of the pencil center
    slices = _center_slices(F, form)
    G = _component_line_form(slices, field)
    P = _dual_parameter_form(field, G)
    TD = T * D
    sf = squarefree_part(TD)
    lines, residual = _split_component_lines(form, G)
    modular = P.divide_exact(sf) is not None
    witness_line = None
    witness_factor = None
    if not modular:
        bad = sf.divide_exact(binary_gcd(sf, P))
        assert bad is not None
        roots, rem = binary_roots(bad)
        if roots:
            # canonical pick: the lexicographically largest normalized text,
            # so runs cannot disagree on which bad line gets reported
            witness_line = max(
                monic_lead(form.line_form(a0, b0)).to_text()
                for (a0, b0), _m in roots
            )
        else:
            witness_factor = rem.to_text()
    return ModularityReport(
        point=tuple(p),
        is_modular=modular,
        mult=form.m,
        component_lines=lines,
        component_residual=residual,
        witness_line=witness_line,
        witness_factor=witness_factor,
    )


def _center_slices(F: Poly, form: PencilForm):
    """The moved-coordinate z-slices of F as binary forms in ("a","b")-free
    local coordinates; slice k is the coefficient of the k-th power of the
    center direction."""
    field = F.field
    axis, locs = form.axis, form.locs
    p = form.point
    # moved coordinates: X = coordinate locs[0], Y = coordinate locs[1],
    # Z traces the center: global = X e_i + Y e_j + Z p
    images = []
    for l in range(3):
        terms: dict = {}
        if l == locs[0]:
            terms[(1, 0, 0)] = field.one
        elif l == locs[1]:
            terms[(0, 1, 0)] = field.one
        if not field.is_zero(p[l]):
            terms[(0, 0, 1)] = field.add(
                terms.get((0, 0, 1), field.zero), p[l]
            )
        images.append(Poly(field, ("x", "y", "z"), terms))
    moved = F.compose(images)
    out = []
    for k in range(moved.degree() + 1):
        terms = {
            (e[0], e[1]): c for e, c in moved.terms.items() if e[2] == k
        }
        out.append(Poly(field, ("x", "y"), terms))
    return out


def _dual_parameter_form(field, G: Poly) -> Poly:
    """P(a,b) = G(b, -a): vanishes exactly at component-line parameters."""
    terms = {}
    for (ex, ey), c in G.terms.items():
        v = c if ey % 2 == 0 else field.neg(c)
        key = (ey, ex)
        s = field.add(terms.get(key, field.zero), v)
        if field.is_zero(s):
            terms.pop(key, None)
        else:
            terms[key] = s
    return Poly(field, AB, terms)


def _split_component_lines(form: PencilForm, G: Poly):
    """Global texts of the rational component lines through p, plus the
    unsplit remainder of the direction form."""
    if G.total_degree() == 0:
        return [], None
    pairs, residual = binary_roots(G)
    lines = []
    for (x0, y0), _mult in pairs:
        field = form.field
        pt = [field.zero] * 3
        pt[form.locs[0]] = x0
        pt[form.locs[1]] = y0
        lines.append(
            monic_lead(
                linear_form_through_points(field, form.point, tuple(pt))
            ).to_text()
        )
    lines.sort()
    res_text = residual.to_text() if residual.total_degree() > 0 else None
    return lines, res_text


def is_supersolvable(F: Poly, candidate_points):
    """First modular candidate wins; a miss only means "not shown"."""
    for p in candidate_points:
        report = is_modular_point(F, p)
        if report.is_modular:
            return True, p
    return False, None


def euler_mu_identity(e: int, m: int) -> int:
    """Total Milnor number (e+m)^2 - em - 2m - e + 1 of a supersolvable
    union of a degree-e curve with m pencil lines through a modular point."""
    assert e >= 1 and m >= 1
    return (e + m) ** 2 - e * m - 2 * m - e + 1
