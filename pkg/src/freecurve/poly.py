"""Exact sparse polynomials and the polynomial-level curve operations.

One class carries every flavor the package needs — trivariate homogeneous
curve equations, binary forms, affine germs in two local variables — as a
term map from exponent tuples to nonzero scalars over a fixed variable tuple.
Construction canonicalizes (zero coefficients dropped), the term order is
descending lexicographic everywhere (iteration, text form, coefficient
vectors), and all operations are pure, so values can be shared freely.

On top of the arithmetic live the geometric primitives: parsing, partials and
the Euler identity, Hessian and polar forms, Sylvester resultants (fraction-
free over polynomial entries), binary discriminants, squarefree parts, line
restrictions, and affine charts centered at a point.
"""

from __future__ import annotations

from . import univariate as uni
from .errors import (
    DegreeTooSmall,
    InputError,
    NotHomogeneous,
    ParseError,
)
from .fields import Field
from .linalg import field_det
from .parse import parse_integer_terms

__all__ = [
    "Poly",
    "LocalChart",
    "monomials",
    "parse_poly",
    "partials",
    "hessian",
    "polar",
    "resultant",
    "discriminant_binary",
    "squarefree_part",
    "translate_to_origin",
    "restrict_to_line",
    "binary_roots",
    "binary_gcd",
    "monic_lead",
    "line_through",
    "linear_form_through_points",
]

XYZ = ("x", "y", "z")
XY = ("x", "y")
UV = ("u", "v")


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, descending lex order."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


class Poly:
    """Sparse polynomial over ``field`` in the variable tuple ``vars``."""

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: Field, vars: tuple[str, ...], terms: dict):
        self.field = field
        self.vars = tuple(vars)
        clean = {}
        for exps, c in terms.items():
            if not field.is_zero(c):
                clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field, vars):
        return cls(field, vars, {})

    @classmethod
    def const(cls, field, vars, scalar):
        return cls(field, vars, {(0,) * len(vars): scalar})

    @classmethod
    def variable(cls, field, vars, name):
        i = vars.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(field, vars, {exps: field.one})

    @classmethod
    def from_integer_terms(cls, field, vars, int_terms: dict):
        return cls(
            field,
            vars,
            {e: field.from_int(n) for e, n in int_terms.items()},
        )

    # -- predicates and degrees --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        """Minimal term degree (germ order at the origin); -1 for zero."""
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def degree(self) -> int:
        """Degree of a homogeneous polynomial (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        degrees = {sum(e) for e in self.terms}
        assert len(degrees) == 1, "degree() on a non-homogeneous polynomial"
        return degrees.pop()

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.field, self.vars, tuple(sorted(self.terms.items(), key=lambda kv: kv[0])))
        )

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        assert isinstance(other, Poly), "polynomial expected"
        assert self.field == other.field and self.vars == other.vars, (
            "operands live over different rings"
        )

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(out.get(e, f.zero), c)
            if f.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(f, self.vars, out)

    def __neg__(self):
        f = self.field
        return Poly(f, self.vars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        n = len(self.vars)
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(ea[i] + eb[i] for i in range(n))
                s = f.add(out.get(e, f.zero), f.mul(ca, cb))
                if f.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly(f, self.vars, out)

    def __pow__(self, e: int):
        assert e >= 0
        out = Poly.const(self.field, self.vars, self.field.one)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def scale(self, s):
        f = self.field
        if f.is_zero(s):
            return Poly.zero(f, self.vars)
        return Poly(f, self.vars, {e: f.mul(s, c) for e, c in self.terms.items()})

    def mul_monomial(self, exps: tuple[int, ...]):
        n = len(self.vars)
        return Poly(
            self.field,
            self.vars,
            {
                tuple(e[i] + exps[i] for i in range(n)): c
                for e, c in self.terms.items()
            },
        )

    # -- calculus and coefficient access ------------------------------------

    def partial(self, i: int):
        f = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = f.mul(f.from_int(e[i]), c)
            if f.is_zero(d):
                continue
            new = list(e)
            new[i] -= 1
            out[tuple(new)] = d
        return Poly(f, self.vars, out)

    def coefficient(self, exps: tuple[int, ...]):
        return self.terms.get(tuple(exps), self.field.zero)

    def coeff_vector(self, degree: int) -> list:
        """Dense coefficients over the degree-``degree`` monomial basis."""
        assert self.is_homogeneous() and (
            self.is_zero() or self.degree() == degree
        )
        return [
            self.terms.get(m, self.field.zero)
            for m in monomials(len(self.vars), degree)
        ]

    def lead(self):
        """Leading (exponents, coefficient) in descending lex order."""
        assert self.terms, "leading term of zero"
        e = max(self.terms)
        return e, self.terms[e]

    def homogeneous_component(self, degree: int):
        return Poly(
            self.field,
            self.vars,
            {e: c for e, c in self.terms.items() if sum(e) == degree},
        )

    def evaluate(self, point) -> object:
        f = self.field
        n = len(self.vars)
        caches: list[dict[int, object]] = [dict() for _ in range(n)]

        def power(i, e):
            if e == 0:
                return f.one
            got = caches[i].get(e)
            if got is None:
                got = f.pow(point[i], e)
                caches[i][e] = got
            return got

        acc = f.zero
        for e, c in self.terms.items():
            v = c
            for i in range(n):
                if e[i]:
                    v = f.mul(v, power(i, e[i]))
            acc = f.add(acc, v)
        return acc

    def compose(self, images: list["Poly"]) -> "Poly":
        """Substitute images[i] for variable i; images share a variable tuple."""
        assert len(images) == len(self.vars)
        f = self.field
        tvars = images[0].vars
        caches: list[dict[int, Poly]] = [dict() for _ in images]

        def power(i, e):
            if e == 0:
                return Poly.const(f, tvars, f.one)
            got = caches[i].get(e)
            if got is None:
                got = images[i] ** e
                caches[i][e] = got
            return got

        acc = Poly.zero(f, tvars)
        for e, c in self.terms.items():
            v = Poly.const(f, tvars, c)
            for i in range(len(images)):
                if e[i]:
                    v = v * power(i, e[i])
            acc = acc + v
        return acc

    def divide_exact(self, divisor: "Poly"):
        """Exact quotient self/divisor, or None when not an exact multiple."""
        self._check(divisor)
        assert divisor, "division by zero polynomial"
        f = self.field
        n = len(self.vars)
        div_lead_e, div_lead_c = divisor.lead()
        inv_lead = f.inv(div_lead_c)
        rem = self
        q: dict = {}
        while rem:
            e, c = rem.lead()
            qe = tuple(e[i] - div_lead_e[i] for i in range(n))
            if any(x < 0 for x in qe):
                return None
            qc = f.mul(c, inv_lead)
            q[qe] = f.add(q.get(qe, f.zero), qc)
            rem = rem - divisor.mul_monomial(qe).scale(qc)
        return Poly(f, self.vars, q)

    def divides(self, other: "Poly") -> bool:
        return other.divide_exact(self) is not None

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: descending lex term order, canonical scalars."""
        if not self.terms:
            return "0"
        f = self.field
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e)
                if k
            )
            ctext = f.to_str(c)
            if not mono:
                piece = ctext if _atomic(ctext) else f"({ctext})"
            elif f.eq(c, f.one):
                piece = mono
            elif f.eq(c, f.neg(f.one)):
                piece = f"-{mono}"
            elif _atomic(ctext):
                piece = f"{ctext}*{mono}"
            else:
                piece = f"({ctext})*{mono}"
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            out += piece if piece.startswith("-") else "+" + piece
        return out

    def __repr__(self):
        return f"<poly {self.to_text()}>"


def _atomic(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return not any(op in body for op in "+-*")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def parse_poly(
    text: str,
    field: Field,
    vars: tuple[str, ...] = XYZ,
    homogeneous: bool = True,
) -> Poly:
    """Parse an expression into a polynomial over ``field``.

    The extension generator ``t`` may appear in the text when the field is an
    extension; its powers fold into the coefficients.  With ``homogeneous``
    set, a degree mismatch between two terms raises
    :class:`~freecurve.errors.NotHomogeneous`.
    """
    vars = tuple(vars)
    use_t = field.kind == "ext" and "t" not in vars
    names = vars + ("t",) if use_t else vars
    int_terms = parse_integer_terms(text, names)
    n = len(vars)
    out: dict = {}
    for exps, coeff in int_terms.items():
        c = field.from_int(coeff)
        if use_t and exps[-1]:
            c = field.mul(c, field.pow(field.gen_value, exps[-1]))
        e = exps[:n]
        s = field.add(out.get(e, field.zero), c)
        if field.is_zero(s):
            out.pop(e, None)
        else:
            out[e] = s
    result = Poly(field, vars, out)
    if homogeneous and not result.is_homogeneous():
        by_degree = sorted(result.terms, key=sum)
        term_a, term_b = by_degree[0], by_degree[-1]
        raise NotHomogeneous(_term_text(vars, term_a), _term_text(vars, term_b))
    return result


def _term_text(vars, exps):
    mono = "*".join(
        v if k == 1 else f"{v}^{k}" for v, k in zip(vars, exps) if k
    )
    return mono or "1"


# ---------------------------------------------------------------------------
# curve-level operations
# ---------------------------------------------------------------------------


def partials(F: Poly) -> tuple[Poly, Poly, Poly]:
    """The three partial derivatives (F_x, F_y, F_z)."""
    assert len(F.vars) == 3
    return F.partial(0), F.partial(1), F.partial(2)


def hessian(F: Poly) -> Poly:
    """Determinant of the matrix of second partials; degree 3(d-2).

    May be the zero polynomial (cones).  Raises DegreeTooSmall below
    degree 2.
    """
    if F.total_degree() < 2:
        raise DegreeTooSmall("Hessian needs degree >= 2")
    n = len(F.vars)
    assert n == 3
    second = [[F.partial(i).partial(j) for j in range(3)] for i in range(3)]
    return (
        second[0][0] * (second[1][1] * second[2][2] - second[1][2] * second[2][1])
        - second[0][1] * (second[1][0] * second[2][2] - second[1][2] * second[2][0])
        + second[0][2] * (second[1][0] * second[2][1] - second[1][1] * second[2][0])
    )


def polar(F: Poly, q) -> Poly:
    """First polar of F with respect to the point q: q0 F_x + q1 F_y + q2 F_z."""
    assert len(F.vars) == 3 and len(q) == 3
    f = F.field
    assert not all(f.is_zero(c) for c in q), "polar point must be nonzero"
    Fx, Fy, Fz = partials(F)
    return Fx.scale(q[0]) + Fy.scale(q[1]) + Fz.scale(q[2])


def _coeff_list_in(f: Poly, i: int) -> list[Poly]:
    """Coefficients of f as a polynomial in variable i (entries drop var i)."""
    d = f.degree_in(i)
    out = [Poly.zero(f.field, f.vars) for _ in range(d + 1)]
    for e, c in f.terms.items():
        rest = list(e)
        k = rest[i]
        rest[i] = 0
        out[k] = out[k] + Poly(f.field, f.vars, {tuple(rest): c})
    return out


def _ring_bareiss_det(rows: list[list[Poly]], field, vars) -> Poly:
    """Fraction-free determinant with polynomial entries (exact divisions)."""
    n = len(rows)
    if n == 0:
        return Poly.const(field, vars, field.one)
    a = [list(r) for r in rows]
    sign = 1
    prev = Poly.const(field, vars, field.one)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c]), None)
        if pivot is None:
            return Poly.zero(field, vars)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        acc = a[c][c]
        for i in range(c + 1, n):
            aic = a[i][c]
            for j in range(c + 1, n):
                num = acc * a[i][j] - aic * a[c][j]
                if num.is_zero():
                    a[i][j] = num
                else:
                    q = num.divide_exact(prev)
                    assert q is not None, "Bareiss division must be exact"
                    a[i][j] = q
            a[i][c] = Poly.zero(field, vars)
        prev = acc
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Sylvester resultant eliminating ``var``; a polynomial in the others.

    The result keeps the same variable tuple with exponent 0 in ``var``.
    """
    f._check(g)
    i = f.vars.index(var)
    df, dg = f.degree_in(i), g.degree_in(i)
    assert df >= 0 and dg >= 0, "resultant of a zero polynomial"
    field, vars = f.field, f.vars
    if df == 0 and dg == 0:
        return Poly.const(field, vars, field.one)
    fc = _coeff_list_in(f, i)
    gc = _coeff_list_in(g, i)
    size = df + dg
    zero = Poly.zero(field, vars)
    rows = []
    for k in range(dg):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[k + j] = c
        rows.append(row)
    for k in range(df):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[k + j] = c
        rows.append(row)
    scalars = all(
        entry.is_zero() or entry.total_degree() == 0
        for row in rows
        for entry in row
    )
    if scalars:
        dm = [
            [entry.coefficient((0,) * len(vars)) for entry in row]
            for row in rows
        ]
        return Poly.const(field, vars, field_det(dm, field))
    return _ring_bareiss_det(rows, field, vars)


def discriminant_binary(g: Poly, uv: tuple[int, int] = (0, 1)) -> Poly:
    """Discriminant-type resultant of a binary form in variables ``uv``.

    For g homogeneous of degree n >= 2 in the two chosen variables (possibly
    with coefficients in the remaining parameter variables), returns
    Res(dg/du, dg/dv) — zero exactly when g acquires a repeated linear
    factor.  Raises DegreeTooSmall for n < 2.
    """
    iu, iv = uv
    n = g.degree_in(iu) + 0
    degq = max((e[iu] + e[iv] for e in g.terms), default=-1)
    if degq < 2:
        raise DegreeTooSmall("binary discriminant needs degree >= 2")
    gu, gv = g.partial(iu), g.partial(iv)
    if gu.is_zero() or gv.is_zero():
        return Poly.zero(g.field, g.vars)
    return _binary_resultant(gu, gv, iu, iv)


def _binary_resultant(f: Poly, g: Poly, iu: int, iv: int) -> Poly:
    """Resultant of two binary forms in variables (iu, iv) via full
    coefficient vectors (no dropped leading terms)."""
    field, vars = f.field, f.vars
    df = max((e[iu] + e[iv] for e in f.terms), default=0)
    dg = max((e[iu] + e[iv] for e in g.terms), default=0)
    zero = Poly.zero(field, vars)

    def coeffs(h, d):
        out = [zero] * (d + 1)
        for e, c in h.terms.items():
            rest = list(e)
            k = rest[iu]
            rest[iu] = 0
            rest[iv] = 0
            out[k] = out[k] + Poly(field, vars, {tuple(rest): c})
        return out

    fc, gc = coeffs(f, df), coeffs(g, dg)
    size = df + dg
    rows = []
    for k in range(dg):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[k + j] = c
        rows.append(row)
    for k in range(df):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[k + j] = c
        rows.append(row)
    scalars = all(
        entry.is_zero() or entry.total_degree() == 0
        for row in rows
        for entry in row
    )
    if scalars:
        dm = [
            [entry.coefficient((0,) * len(vars)) for entry in row]
            for row in rows
        ]
        return Poly.const(field, vars, field_det(dm, field))
    return _ring_bareiss_det(rows, field, vars)


def squarefree_part(f: Poly) -> Poly:
    """Product of the distinct irreducible factors (univariate/binary input).

    Univariate input (one effective variable) or a homogeneous binary form;
    the result is normalized monic in the distinguished variable.
    """
    assert f, "squarefree part of zero"
    field = f.field
    used = [i for i in range(len(f.vars)) if f.degree_in(i) > 0]
    if not used:
        return Poly.const(field, f.vars, field.one)
    if len(used) == 1:
        i = used[0]
        coeffs = _univariate_coeffs(f, i)
        sf = uni.squarefree_part(field, coeffs)
        return _from_univariate(field, f.vars, i, sf)
    assert len(used) == 2 and f.is_homogeneous(), (
        "squarefree part handles univariate and binary inputs"
    )
    iu, iv = used
    # split off the v-power, dehomogenize in u, reuse the univariate routine
    vmult = min(e[iv] for e in f.terms)
    coeffs = [field.zero] * (f.degree() - vmult + 1)
    for e, c in f.terms.items():
        coeffs[e[iu]] = c
    sf = uni.squarefree_part(field, uni.strip(field, coeffs))
    out = _rehomogenize(field, f.vars, iu, iv, sf, uni.deg(sf))
    if vmult:
        v = Poly.variable(field, f.vars, f.vars[iv])
        out = out * v
    return out


def _univariate_coeffs(f: Poly, i: int) -> list:
    out = [f.field.zero] * (f.degree_in(i) + 1)
    for e, c in f.terms.items():
        out[e[i]] = c
    return uni.strip(f.field, out)


def _from_univariate(field, vars, i, coeffs) -> Poly:
    terms = {}
    n = len(vars)
    for k, c in enumerate(coeffs):
        if not field.is_zero(c):
            e = tuple(k if j == i else 0 for j in range(n))
            terms[e] = c
    return Poly(field, vars, terms)


def _rehomogenize(field, vars, iu, iv, coeffs, degree) -> Poly:
    terms = {}
    n = len(vars)
    for k, c in enumerate(coeffs):
        if field.is_zero(c):
            continue
        e = [0] * n
        e[iu] = k
        e[iv] = degree - k
        terms[tuple(e)] = c
    return Poly(field, vars, terms)


# ---------------------------------------------------------------------------
# charts, lines, restrictions
# ---------------------------------------------------------------------------


class LocalChart:
    """Affine germ of a projective curve at a point.

    The chart dehomogenizes at a nonzero coordinate of p (the highest index,
    so (0:0:1) gives the familiar z = 1 chart) and translates p to the
    origin.  ``germ`` lives in local variables ("x", "y") ordered by the two
    remaining coordinate indices.  Local linear forms convert back to global
    lines through p via :meth:`line_to_global`.
    """

    __slots__ = ("field", "germ", "axis", "point", "locals")

    def __init__(self, field, germ: Poly, axis: int, point: tuple, locals: tuple):
        self.field = field
        self.germ = germ
        self.axis = axis
        self.point = point
        self.locals = locals  # the two global coordinate indices

    def line_to_global(self, a, b) -> Poly:
        """Global line whose germ at the point is a*x + b*y (local coords)."""
        f = self.field
        i, j = self.locals
        const = f.neg(
            f.add(f.mul(a, self.point[i]), f.mul(b, self.point[j]))
        )
        terms = {}
        for idx, c in ((i, a), (j, b), (self.axis, const)):
            if not f.is_zero(c):
                e = [0, 0, 0]
                e[idx] = 1
                terms[tuple(e)] = f.add(terms.get(tuple(e), f.zero), c)
        return Poly(f, XYZ, terms)

    def global_line_to_local(self, line: Poly):
        """Local (a, b) of a global line through the point, or None."""
        f = self.field
        if not f.is_zero(line.evaluate(self.point)):
            return None
        i, j = self.locals
        e_i = tuple(1 if k == i else 0 for k in range(3))
        e_j = tuple(1 if k == j else 0 for k in range(3))
        return line.coefficient(e_i), line.coefficient(e_j)


def translate_to_origin(F: Poly, p) -> LocalChart:
    """Affine germ of F at p: dehomogenize at a nonzero coordinate of p and
    translate p to the origin.  The germ vanishes at (0,0) iff p lies on F."""
    f = F.field
    assert len(F.vars) == 3 and len(p) == 3
    axis = max(i for i in range(3) if not f.is_zero(p[i]))
    inv = f.inv(p[axis])
    point = tuple(f.mul(inv, c) for c in p)
    loc = tuple(i for i in range(3) if i != axis)
    images = []
    for i in range(3):
        if i == axis:
            images.append(Poly.const(f, XY, f.one))
        else:
            which = loc.index(i)
            images.append(
                Poly(
                    f,
                    XY,
                    {
                        (1, 0) if which == 0 else (0, 1): f.one,
                        (0, 0): point[i],
                    },
                )
            )
    germ = F.compose(images)
    return LocalChart(f, germ, axis, point, loc)


def restrict_to_line(F: Poly, p0, p1) -> Poly:
    """Binary form F(u*p0 + v*p1) in ("u", "v"): the restriction of F to the
    line through the two (independent) points."""
    f = F.field
    images = []
    for i in range(3):
        images.append(
            Poly(
                f,
                UV,
                {(1, 0): p0[i], (0, 1): p1[i]},
            )
        )
    return F.compose(images)


def binary_roots(f: Poly):
    """Projective roots of a binary form with multiplicities.

    Returns ``(pairs, residual)``: pairs of ((a, b) point on the projective
    line, multiplicity), and the monic residual with no roots found over the
    field.  The point at infinity (1, 0) comes from the power of the second
    variable dividing f.
    """
    field = f.field
    assert len(f.vars) == 2 and f.is_homogeneous() and f
    d = f.degree()
    iv_mult = min(e[1] for e in f.terms) if f.terms else 0
    coeffs = [field.zero] * (d - iv_mult + 1)
    for e, c in f.terms.items():
        coeffs[e[0]] = c
    coeffs = uni.strip(field, coeffs)
    pairs = []
    if iv_mult:
        pairs.append(((field.one, field.zero), iv_mult))
    roots, residual = uni.roots_with_multiplicity(field, coeffs)
    for r, m in roots:
        pairs.append(((r, field.one), m))
    res_poly = _rehomogenize(field, f.vars, 0, 1, residual, uni.deg(residual))
    return pairs, res_poly


def monic_lead(f: Poly) -> Poly:
    """Scale so the lex-leading coefficient is one (canonical line texts)."""
    assert f, "cannot normalize the zero polynomial"
    _e, c = f.lead()
    return f.scale(f.field.inv(c))


def binary_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of two binary forms in the same two effective variables."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    field = f.field
    idx = sorted(
        {i for i in range(len(f.vars)) if f.degree_in(i) > 0}
        | {i for i in range(len(g.vars)) if g.degree_in(i) > 0}
    )
    if not idx:
        return Poly.const(field, f.vars, field.one)
    assert len(idx) <= 2 and f.is_homogeneous() and g.is_homogeneous()
    iu = idx[0]
    iv = idx[1] if len(idx) == 2 else (iu + 1) % len(f.vars)

    def split(h):
        cu = min(e[iu] for e in h.terms)
        cv = min(e[iv] for e in h.terms)
        coeffs = [field.zero] * (h.degree() - cu - cv + 1)
        for e, c in h.terms.items():
            coeffs[e[iu] - cu] = c
        return cu, cv, uni.strip(field, coeffs)

    fu, fv, fc = split(f)
    gu, gv, gc = split(g)
    core = uni.gcd(field, fc, gc)
    out = _rehomogenize(field, f.vars, iu, iv, core, uni.deg(core))
    mono = [0] * len(f.vars)
    mono[iu] = min(fu, gu)
    mono[iv] = min(fv, gv)
    return out.mul_monomial(tuple(mono))


def line_through(field, p, q) -> tuple:
    """Coefficients (a, b, c) of the line through two distinct points
    (cross product)."""
    a = field.sub(field.mul(p[1], q[2]), field.mul(p[2], q[1]))
    b = field.sub(field.mul(p[2], q[0]), field.mul(p[0], q[2]))
    c = field.sub(field.mul(p[0], q[1]), field.mul(p[1], q[0]))
    assert not (field.is_zero(a) and field.is_zero(b) and field.is_zero(c)), (
        "points must be distinct"
    )
    return a, b, c


def linear_form_through_points(field, p, q) -> Poly:
    a, b, c = line_through(field, p, q)
    return Poly(
        field,
        XYZ,
        {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c},
    )
