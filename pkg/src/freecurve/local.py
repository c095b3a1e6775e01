"""Invariants of a curve germ at a rational point.

Everything works in the affine local picture: a germ is a polynomial in two
variables vanishing at the origin, usually produced by
:func:`freecurve.poly.translate_to_origin`.  All dimensions reduce to one
primitive, :func:`colength` — the dimension of the local ring modulo an
ideal, computed on truncations with Nakayama stabilization (two consecutive
truncation levels agreeing prove the true value).  Milnor and Tjurina
numbers, intersection multiplicities, tangential multiplicities along
tangent-cone lines, and the contact order with the Hessian curve all come
from it.  (Intersection numbers of a coprime pair also have a resultant
shortcut; it agrees with the colength definition whenever its coordinate
certificate holds, and the definition remains the fallback.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import univariate as uni
from .errors import (
    CommonComponent,
    HessianVanishes,
    LineComponent,
    IncompleteSplit,
    NotIsolated,
    NotOnCurve,
    NotTangent,
)
from .linalg import field_rank, gf_rank, int_rank
from .poly import (
    Poly,
    XY,
    binary_roots,
    hessian,
    monomials,
    resultant,
    translate_to_origin,
)

__all__ = [
    "multiplicity",
    "initial_form",
    "tangent_cone",
    "colength",
    "intersection_multiplicity",
    "milnor_number",
    "tjurina_local",
    "is_quasi_homogeneous",
    "weighted_mu",
    "tangential_multiplicity",
    "hessian_contact",
    "check_milnor_union",
    "LocalReport",
    "local_report",
]


def multiplicity(f: Poly) -> int:
    """Order of the germ at the origin (lowest total degree of a term)."""
    field = f.field
    if f.is_zero() or not field.is_zero(f.coefficient((0, 0))):
        raise NotOnCurve("germ does not vanish at the origin")
    return f.min_degree()


def initial_form(f: Poly) -> Poly:
    return f.homogeneous_component(f.min_degree())


def tangent_cone(f: Poly) -> list[tuple[Poly, int]]:
    """Initial form split into pairwise non-proportional linear forms.

    Each entry is (linear form in the local variables, multiplicity).
    Raises IncompleteSplit when part of the initial form has no roots over
    the coefficient field; callers may then supply lines explicitly.
    """
    m = multiplicity(f)
    field = f.field
    init = initial_form(f)
    pairs, residual = binary_roots(init)
    lines = []
    for (a, b), mult in pairs:
        line = Poly(f.field, f.vars, {(1, 0): b, (0, 1): field.neg(a)})
        line = _normalize_line(line)
        lines.append((line, mult))
    if residual.total_degree() > 0:
        raise IncompleteSplit(residual.to_text())
    lines.sort(key=lambda pair: pair[0].to_text())
    assert sum(mult for _, mult in lines) == m
    return lines


def _normalize_line(line: Poly) -> Poly:
    e, c = line.lead()
    return line.scale(line.field.inv(c))


def _truncated_dim(field, gens, N: int) -> int:
    """dim of K[[x,y]] / (ideal + m^N): monomials below N minus row rank."""
    basis = []
    for k in range(N):
        basis.extend(monomials(2, k))
    index = {m: i for i, m in enumerate(basis)}
    cols = len(basis)
    rows = []
    for g in gens:
        order = g.min_degree()
        for k in range(N - order):
            for a, b in monomials(2, k):
                row = [field.zero] * cols
                nonzero = False
                for (e1, e2), c in g.terms.items():
                    e = (e1 + a, e2 + b)
                    i = index.get(e)
                    if i is not None:
                        row[i] = c
                        nonzero = True
                if nonzero:
                    rows.append(row)
    if not rows:
        return cols
    return cols - _rank(field, rows)


def _rank(field, rows) -> int:
    if field.kind == "Fp":
        return gf_rank([[int(c) for c in row] for row in rows], field.p)
    if field.kind == "Q":
        return int_rank([_cleared(row) for row in rows])
    if field.kind == "ext":
        # restriction of scalars: the K-span of the rows equals the
        # base-span of their multiples by 1, t, ..., t^(k-1), so the base
        # rank of the flattened matrix is k times the K-rank.
        k = field.degree
        base = field.base
        powers = [field.one]
        for _ in range(k - 1):
            powers.append(field.mul(powers[-1], field.gen_value))
        blown = []
        for row in rows:
            for i, t_i in enumerate(powers):
                flat = []
                for c in row:
                    if i and not field.is_zero(c):
                        c = field.mul(t_i, c)
                    flat.extend(c)
                blown.append(flat)
        if base.kind == "Fp":
            return gf_rank([[int(c) for c in row] for row in blown], base.p) // k
        return int_rank([_cleared(row) for row in blown]) // k
    return field_rank(rows, field)


def _cleared(row) -> list:
    """Rational row scaled by the common denominator, as ints."""
    lcm = 1
    for c in row:
        if c:
            lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    return [int(c * lcm) for c in row]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def colength(field, gens, cap: int | None = None, start: int = 2) -> int:
    """dim_K of K[[x,y]] / (gens) by truncation.

    Dimensions of the truncations at levels N and N+1 agreeing certify the
    stable value (Nakayama).  ``start`` seeds the scan — a caller with a
    predicted value can begin there; correctness never depends on the seed.
    Raises NotIsolated when the cap is reached without stabilizing.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise NotIsolated("zero ideal has infinite colength")
    if any(not field.is_zero(g.coefficient((0, 0))) for g in gens):
        return 0
    if cap is None:
        cap = 4 * sum(g.total_degree() for g in gens) + 8
    N = max(2, start)
    prev = _truncated_dim(field, gens, N)
    while N + 1 <= cap:
        cur = _truncated_dim(field, gens, N + 1)
        if cur == prev:
            return cur
        prev = cur
        N += 1
    raise NotIsolated(f"no stabilization below truncation level {cap}")


# Linear changes of coordinates tried by the resultant shortcut; only
# finitely many directions can break its certificate, so a short list of
# shears (plus the swap) almost always contains a good one.
_SHEARS = (
    (1, 0, 0, 1),
    (1, 1, 0, 1),
    (1, -1, 0, 1),
    (0, 1, 1, 0),
    (1, 2, 0, 1),
    (1, 0, 1, 1),
    (1, 0, -1, 1),
    (1, 3, 0, 1),
)


def _restrict_x0(h: Poly) -> list:
    """Coefficient list of h(0, y), lowest degree first."""
    field = h.field
    out = [field.zero] * (h.degree_in(1) + 1)
    for (e1, e2), c in h.terms.items():
        if e1 == 0:
            out[e2] = c
    return uni.strip(field, out)


def _resultant_order(f: Poly, g: Poly) -> int | None:
    """ord_x res_y(f, g) when it provably equals the intersection number.

    The order of the resultant in x collects the intersection numbers at
    all common zeros on the line x=0, plus spurious contributions when a
    leading y-coefficient vanishes there.  So the value is exact once some
    linear change of coordinates certifies that neither germ drops
    y-degree on x=0 and that gcd(f(0,y), g(0,y)) is a power of y (origin
    is the only common zero on the line).  Under that certificate a
    vanishing resultant forces a shared factor through the origin, so it
    raises CommonComponent rather than falling through.  Returns None when
    no tried change certifies.
    """
    field = f.field
    for a, b, c, d in _SHEARS:
        if (a, b, c, d) == (1, 0, 0, 1):
            ft, gt = f, g
        else:
            images = [
                Poly(field, XY, {(1, 0): field.from_int(a), (0, 1): field.from_int(b)}),
                Poly(field, XY, {(1, 0): field.from_int(c), (0, 1): field.from_int(d)}),
            ]
            ft, gt = f.compose(images), g.compose(images)
        f0, g0 = _restrict_x0(ft), _restrict_x0(gt)
        if not f0 or not g0:
            continue
        if uni.deg(f0) != ft.degree_in(1) or uni.deg(g0) != gt.degree_in(1):
            continue
        common = uni.gcd(field, f0, g0)
        if any(not field.is_zero(cc) for cc in common[:-1]):
            continue
        res = resultant(ft, gt, XY[1])
        if res.is_zero():
            raise CommonComponent("germs share a component through the origin")
        return res.min_degree()
    return None


# Truncation level below which the colength route is always cheap; pairs
# whose quotient lives above it go through the resultant shortcut instead.
_LOW_TRUNCATION = 20


def intersection_multiplicity(f: Poly, g: Poly, hint: int | None = None) -> int:
    """Intersection number dim K[[x,y]]/(f,g) of two germs at the origin.

    Tries a low-truncation colength first (cheap whenever the quotient
    lives in small degrees), then the resultant shortcut, and last the
    full colength from the caller's hint.  All three routes are exact;
    the ordering is a cost policy.  Raises CommonComponent when the germs
    share a factor through the origin (a certified vanishing resultant,
    or failure to stabilize below the product-of-degrees bound, which
    caps the multiplicity of any coprime pair).
    """
    assert f and g, "intersection with the zero germ"
    df, dg = f.total_degree(), g.total_degree()
    cap = max(df * dg + 2, 4 * (df + dg) + 8)
    field = f.field
    if cap > _LOW_TRUNCATION:
        try:
            return colength(field, [f, g], cap=_LOW_TRUNCATION, start=2)
        except NotIsolated:
            pass
        fast = _resultant_order(f, g)
        if fast is not None:
            return fast
        start = max(_LOW_TRUNCATION - 1, hint or 2)
    else:
        start = 2 if hint is None else max(2, hint)
    try:
        return colength(field, [f, g], cap=cap, start=start)
    except NotIsolated:
        raise CommonComponent(
            "germs share a component through the origin"
        ) from None


def milnor_number(f: Poly) -> int:
    """Milnor number: colength of the ideal of partials."""
    return colength(f.field, [f.partial(0), f.partial(1)])


def tjurina_local(f: Poly) -> int:
    """Tjurina number: colength of (f, f_x, f_y)."""
    return colength(f.field, [f, f.partial(0), f.partial(1)])


def is_quasi_homogeneous(f: Poly) -> bool:
    """Milnor equals Tjurina exactly on quasi-homogeneous germs."""
    return milnor_number(f) == tjurina_local(f)


def weighted_mu(w1: Fraction, w2: Fraction) -> Fraction:
    """Milnor number (1-w1)(1-w2)/(w1 w2) of a weighted-homogeneous germ."""
    w1, w2 = Fraction(w1), Fraction(w2)
    assert 0 < w1 < 1 and 0 < w2 < 1, "weights must lie in (0,1)"
    return (1 - w1) * (1 - w2) / (w1 * w2)


def order_along_line(f: Poly, line: Poly) -> int | None:
    """Vanishing order of the germ along the parameterized line, or None
    when the line divides the germ."""
    field = f.field
    alpha = line.coefficient((1, 0))
    beta = line.coefficient((0, 1))
    # direction vector of {alpha x + beta y = 0}
    dx, dy = beta, field.neg(alpha)
    by_degree: dict[int, object] = {}
    for (e1, e2), c in f.terms.items():
        v = field.mul(c, field.mul(field.pow(dx, e1), field.pow(dy, e2)))
        k = e1 + e2
        by_degree[k] = field.add(by_degree.get(k, field.zero), v)
    orders = sorted(k for k, v in by_degree.items() if not field.is_zero(v))
    return orders[0] if orders else None


def tangential_multiplicity(f: Poly, line: Poly) -> int:
    """m_L for a tangent-cone line: the intersection number of the line with
    the union of branches tangent to it.

    Computed as (L, C)_0 - m_0 + a_L, where a_L is the exponent of the line
    in the initial form: branches not tangent to L meet it with exactly
    their multiplicity.
    """
    m = multiplicity(f)
    field = f.field
    init = initial_form(f)
    a_L = 0
    rem = init
    line = _normalize_line(line)
    while True:
        q = rem.divide_exact(line)
        if q is None:
            break
        a_L += 1
        rem = q
    if a_L == 0:
        raise NotTangent(f"{line.to_text()} does not divide the initial form")
    contact = order_along_line(f, line)
    if contact is None:
        raise LineComponent(f"{line.to_text()} divides the germ")
    m_L = contact - m + a_L
    assert m_L >= a_L + 1
    return m_L


def hessian_contact(F: Poly, p, hint: int | None = None) -> int:
    """Contact order (C, H_C)_p of the curve with its Hessian.

    At smooth points this is the inflection order.  Raises HessianVanishes
    when the Hessian is identically zero and CommonComponent when the curve
    has a line component through p (always shared with the Hessian).
    """
    H = hessian(F)
    if H.is_zero():
        raise HessianVanishes("curve has identically vanishing Hessian")
    field = F.field
    chart = translate_to_origin(F, p)
    f = chart.germ
    if f.is_zero() or not field.is_zero(f.coefficient((0, 0))):
        raise NotOnCurve("point does not lie on the curve")
    # a line component through p lies in the Hessian too; catch it up front
    init = initial_form(f)
    pairs, _residual = binary_roots(init)
    for (a, b), _mult in pairs:
        line = Poly(field, XY, {(1, 0): b, (0, 1): field.neg(a)})
        if order_along_line(f, line) is None:
            glob = chart.line_to_global(b, field.neg(a))
            if glob.divides(F):
                raise CommonComponent(
                    f"line component {glob.to_text()} through the point"
                )
    h = translate_to_origin(H, p).germ
    if not field.is_zero(h.coefficient((0, 0))):
        return 0
    return intersection_multiplicity(f, h, hint=hint)


def check_milnor_union(fX: Poly, fY: Poly) -> bool:
    """Exact check of mu(X u Y) = mu(X) + mu(Y) + 2 (X,Y) - 1 at the origin."""
    muX = milnor_number(fX)
    muY = milnor_number(fY)
    inter = intersection_multiplicity(fX, fY)
    mu_union = milnor_number(fX * fY)
    return mu_union == muX + muY + 2 * inter - 1


# ---------------------------------------------------------------------------
# per-point report
# ---------------------------------------------------------------------------


@dataclass
class LocalReport:
    """All germ invariants of a curve at one rational point."""

    point: tuple
    mult: int
    mu: int
    tau_local: int
    kappa: int
    quasi_homogeneous: bool
    hessian_contact: int | None
    hessian_shared: bool
    split: bool
    tangent_cone: list  # entries (line Poly, exponent, m_L or None)

    def to_json(self, field) -> dict:
        cone = [
            {
                "line": line.to_text(),
                "exponent": a,
                "tangential_multiplicity": m_L,
            }
            for line, a, m_L in self.tangent_cone
        ]
        return {
            "point": [field.to_str(c) for c in self.point],
            "mult": self.mult,
            "mu": self.mu,
            "tau": self.tau_local,
            "kappa": self.kappa,
            "quasi_homogeneous": self.quasi_homogeneous,
            "hessian_contact": self.hessian_contact,
            "hessian_shared": self.hessian_shared,
            "tangent_cone_split": self.split,
            "tangent_cone": cone,
        }


def local_report(F: Poly, p) -> LocalReport:
    """Full germ analysis of the curve at one point of it."""
    field = F.field
    chart = translate_to_origin(F, p)
    f = chart.germ
    m = multiplicity(f)
    mu = milnor_number(f)
    tau = tjurina_local(f)
    cone = []
    split = True
    try:
        for line, a in tangent_cone(f):
            try:
                m_L = tangential_multiplicity(f, line)
            except LineComponent:
                m_L = None
            cone.append((line, a, m_L))
    except IncompleteSplit:
        split = False
        init = initial_form(f)
        pairs, _residual = binary_roots(init)
        for (a, b), mult in pairs:
            line = _normalize_line(
                Poly(field, XY, {(1, 0): b, (0, 1): field.neg(a)})
            )
            try:
                m_L = tangential_multiplicity(f, line)
            except LineComponent:
                m_L = None
            cone.append((line, mult, m_L))
        cone.sort(key=lambda triple: triple[0].to_text())
    shared = False
    contact: int | None
    try:
        hint = None
        if split and all(m_L is not None for _, _, m_L in cone) and m > 1:
            hint = 3 * mu + m - 3 + sum(m_L for _, _, m_L in cone)
        contact = hessian_contact(F, p, hint=hint)
    except CommonComponent:
        contact, shared = None, True
    except HessianVanishes:
        contact, shared = None, True
    return LocalReport(
        point=tuple(p),
        mult=m,
        mu=mu,
        tau_local=tau,
        kappa=mu + m - 1,
        quasi_homogeneous=(mu == tau),
        hessian_contact=contact,
        hessian_shared=shared,
        split=split,
        tangent_cone=cone,
    )
