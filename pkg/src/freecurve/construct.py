"""Curve builders, line-addition combinators, and the verified catalog.

Every curve the package ships can be rebuilt from a small recipe: a builder
name with integer/scalar parameters, optionally followed by explicit lines
to multiply in.  A recipe instantiates over any field satisfying its minimal
field requirement, and instantiation always ends with a reducedness
certificate — a rational line whose restriction to the curve is squarefree
of full degree — so no construction can silently produce a curve with a
repeated component.

The catalog (``catalog.json``, shipped next to this module) pins the
expected invariants of every entry: degree, minimal syzygy degree, global
Tjurina number, verdict with exponents, singular points with local data,
stored syzygy certificates, modular and non-modular points, and inflection
data.  :func:`verify_entry` recomputes everything from the recipe and
reports each comparison; the command-line ``repro`` mode is a loop over it.

Tjurina numbers are certified by two independent routes.  Free curves carry
a determinant certificate (a syzygy pair whose Saito matrix has determinant
c·F with c a nonzero scalar), which pins τ through the exponent formula.
Curves with a complete singular-point list are pinned by the sum of local
Tjurina numbers, cross-checked against the graded computation over two
large prime fields: the mod-p value can only overshoot the rational one,
and the local sum can only undershoot it, so agreement certifies both.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

from . import univariate as uni
from .analyze import (
    AB,
    inflection_order,
    is_modular_point,
    is_supersolvable,
    pencil_through_point,
    total_inflection,
)
from .classify import classify_curve
from .errors import (
    CatalogMissing,
    DegreeMismatch,
    HessianVanishes,
    Inconsistent,
    InputError,
    NotReduced,
    NotSplit,
    OutOfRange,
    TangencyDegenerate,
    UnknownEntry,
    ZeroInverse,
)
from .fields import PrimeField, field_from_config, parse_scalar
from .graded import (
    SyzygyVector,
    global_tjurina,
    is_syzygy,
    mdr,
    saito_certificate,
    syzygy_space,
)
from .local import milnor_number, multiplicity, tjurina_local
from .poly import (
    Poly,
    binary_roots,
    hessian,
    monic_lead,
    parse_poly,
    restrict_to_line,
    squarefree_part,
    translate_to_origin,
)

__all__ = [
    "EVIDENCE_PRIMES",
    "CurveSpec",
    "CatalogEntry",
    "EntryReport",
    "UnionStep",
    "add_line",
    "assert_reduced",
    "build_ciani",
    "build_conicline",
    "build_cross_family",
    "build_fermat_family",
    "build_line_tower",
    "build_named",
    "builder_spec",
    "catalog_entry",
    "catalog_path",
    "conic_tangents_from_point",
    "instantiate_recipe",
    "load_catalog",
    "reduce_mod_prime",
    "union_mdr_step",
    "verify_entry",
]


# Both evidence primes are 1 mod 24, so t^2+1, t^2+t+1, t^2-t+1 and t^4+1
# all split mod p and every extension coefficient in the catalog has a
# deterministic prime-field image.
EVIDENCE_PRIMES = (2147483497, 2147483353)


# ---------------------------------------------------------------------------
# mod-p reduction of characteristic-zero curves
# ---------------------------------------------------------------------------


def _generator_image(field, fp):
    """Smallest root in F_p of the extension's generator polynomial."""
    coeffs = []
    for c in field.minpoly:
        fr = Fraction(c)
        if fr.denominator % fp.p == 0:
            raise ZeroInverse(f"denominator divisible by {fp.p}")
        coeffs.append(fp.div(fp.from_int(fr.numerator), fp.from_int(fr.denominator)))
    roots, _residual = uni.roots_with_multiplicity(fp, coeffs)
    if not roots:
        raise NotSplit(field.config()["minpoly"])
    return fp.from_int(min(int(r) for r, _m in roots))


def reduce_mod_prime(F: Poly, p: int) -> Poly:
    """Image of a characteristic-zero curve over F_p.

    Rational coefficients map through numerator times inverse denominator;
    extension coefficients evaluate at the smallest prime-field root of the
    generator polynomial, a fixed choice so repeated runs agree.
    """
    fp = PrimeField(p)
    field = F.field

    if field.kind == "Q":

        def image(c):
            fr = Fraction(c)
            if fr.denominator % p == 0:
                raise ZeroInverse(f"denominator divisible by {p}")
            return fp.div(fp.from_int(fr.numerator), fp.from_int(fr.denominator))

    elif field.kind == "ext":
        if field.base.kind != "Q":
            raise InputError("reduction expects characteristic-zero coefficients")
        t0 = _generator_image(field, fp)

        def image(c):
            # Horner evaluation of the residue-class polynomial at t0
            acc = fp.zero
            for a in reversed(c):
                fr = Fraction(a)
                if fr.denominator % p == 0:
                    raise ZeroInverse(f"denominator divisible by {p}")
                av = fp.div(fp.from_int(fr.numerator), fp.from_int(fr.denominator))
                acc = fp.add(fp.mul(acc, t0), av)
            return acc

    else:
        raise InputError("reduction expects characteristic-zero coefficients")

    terms = {}
    for e, c in F.terms.items():
        v = image(c)
        if not fp.is_zero(v):
            terms[e] = v
    return Poly(fp, F.vars, terms)


# ---------------------------------------------------------------------------
# reducedness certificate
# ---------------------------------------------------------------------------


def assert_reduced(F: Poly):
    """Find a rational line whose restriction to F is squarefree of full
    degree, which certifies that F itself is squarefree.

    If F had a repeated factor, every line restriction would inherit the
    square, so the scan can only fail on genuinely non-reduced input; a
    reduced curve has finitely many bad lines and small parameters clear
    them quickly.  Returns the witness point pair.
    """
    field = F.field
    d = F.degree()
    for a in range(8):
        for b in range(8):
            p0 = (field.one, field.from_int(a), field.from_int(b))
            p1 = (field.zero, field.one, field.from_int(a + 1))
            R = restrict_to_line(F, p0, p1)
            if R.is_zero():
                continue  # the line is a component; move on
            if squarefree_part(R).degree() == d:
                return p0, p1
    raise NotReduced(f"no squarefree line restriction found for {F.to_text()}")


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------


def add_line(F: Poly, line: Poly) -> Poly:
    """Multiply a curve by a new line; refuses a line already in the curve."""
    if line.degree() != 1 or not line.is_homogeneous():
        raise InputError(f"not a linear form: {line.to_text()}")
    if line.divides(F):
        raise NotReduced(f"line {line.to_text()} is already a component")
    return F * line


@dataclass
class UnionStep:
    """Outcome of the distinct-intersection test for mdr of a union.

    With C1 of minimal syzygy degree r1 and C2 smooth of degree d2 meeting
    C1 in ``count`` distinct points, count > (r1+1)*d2 forces the union's
    minimal syzygy degree to be exactly r1 + d2.  ``predicted`` is that
    value, or None with a reason when the test does not apply.
    """

    base_mdr: int
    added_degree: int
    count: int
    threshold: int
    predicted: int | None
    note: str | None = None

    def to_json(self) -> dict:
        return {
            "base_mdr": self.base_mdr,
            "added_degree": self.added_degree,
            "count": self.count,
            "threshold": self.threshold,
            "predicted": self.predicted,
            "note": self.note,
        }


def _line_points(line: Poly):
    """Two spanning points of a line from its coefficients."""
    field = line.field
    a = line.coefficient((1, 0, 0))
    b = line.coefficient((0, 1, 0))
    c = line.coefficient((0, 0, 1))
    pts = []
    for u, v, w in (
        (field.zero, c, field.neg(b)),
        (c, field.zero, field.neg(a)),
        (b, field.neg(a), field.zero),
    ):
        if any(not field.is_zero(t) for t in (u, v, w)):
            pts.append((u, v, w))
    if len(pts) < 2:
        raise InputError("degenerate line")
    return pts[0], pts[1]


def union_mdr_step(F1: Poly, F2: Poly, r1: int | None = None, meet_points=None) -> UnionStep:
    """Predict mdr(F1*F2) from distinct intersection points.

    For a line F2 the count is computed as the squarefree degree of the
    restriction of F1; for higher-degree F2 the caller must supply the
    intersection points.  When intersection points are available (supplied,
    or the rational roots of a fully split restriction) the singularities of
    the union along F2 are additionally checked to be quasi-homogeneous;
    a failure withdraws the prediction with a reason, an incomplete rational
    picture is noted but does not affect the count.
    """
    field = F1.field
    d2 = F2.degree()
    if r1 is None:
        r1 = mdr(F1)
    note = None
    points = list(meet_points) if meet_points is not None else None

    if d2 == 1:
        p0, p1 = _line_points(F2)
        R = restrict_to_line(F1, p0, p1)
        if R.is_zero():
            raise NotReduced(f"line {F2.to_text()} is a component of the curve")
        count = squarefree_part(R).degree()
        if points is None:
            pairs, residual = binary_roots(squarefree_part(R))
            points = [
                tuple(
                    field.add(field.mul(u, p0[i]), field.mul(v, p1[i]))
                    for i in range(3)
                )
                for (u, v), _m in pairs
            ]
            if residual.total_degree() > 0:
                note = "side conditions checked at field-rational intersections only"
    else:
        if points is None:
            raise InputError(
                "intersection points are required when the added curve is not a line"
            )
        for q in points:
            if not (field.is_zero(F1.evaluate(q)) and field.is_zero(F2.evaluate(q))):
                raise InputError("supplied point is not on both curves")
        count = len(points)

    threshold = (r1 + 1) * d2
    if count <= threshold:
        return UnionStep(r1, d2, count, threshold, None, "count does not exceed (r1+1)*d2")

    union = F1 * F2
    for q in points or ():
        germ = translate_to_origin(union, q).germ
        if milnor_number(germ) != tjurina_local(germ):
            return UnionStep(
                r1,
                d2,
                count,
                threshold,
                None,
                "non-quasi-homogeneous singularity on the added component",
            )
    return UnionStep(r1, d2, count, threshold, r1 + d2, note)


# ---------------------------------------------------------------------------
# tangent lines from an external point to a conic
# ---------------------------------------------------------------------------


def conic_tangents_from_point(Q: Poly, q, exclude: Poly | None = None) -> list[Poly]:
    """The tangent lines through q to a smooth conic, as monic linear forms.

    Restricting Q to the pencil of lines through q gives a binary quadratic
    whose (u, v)-discriminant is a binary quadratic in the pencil parameters;
    its roots are the tangency parameters.  Lines are returned sorted by
    text; ``exclude`` drops a designated known tangent.
    """
    field = Q.field
    if Q.degree() != 2 or not Q.is_homogeneous():
        raise DegreeMismatch("expected a conic")
    if hessian(Q).is_zero():
        raise HessianVanishes("the conic is singular")
    q = tuple(q)
    if field.is_zero(Q.evaluate(q)):
        raise InputError("tangents are drawn from a point off the conic")
    form = pencil_through_point(Q, q)
    # q off the conic: the restriction keeps full degree 2 in (u, v)
    by_eu: dict[int, dict] = {0: {}, 1: {}, 2: {}}
    for (eu, ev, ea, eb), c in form.g.terms.items():
        by_eu[eu][(ea, eb)] = c
    A = Poly(field, AB, by_eu[2])
    B = Poly(field, AB, by_eu[1])
    C = Poly(field, AB, by_eu[0])
    disc = B * B - (A * C).scale(field.from_int(4))
    if disc.is_zero():
        raise TangencyDegenerate("tangency discriminant vanishes identically")
    pairs, residual = binary_roots(disc)
    if residual.total_degree() > 0:
        raise NotSplit(residual.to_text())
    lines = []
    for (a0, b0), m in pairs:
        if m > 1:
            raise TangencyDegenerate(
                f"repeated tangency parameter ({field.to_str(a0)}:{field.to_str(b0)})"
            )
        lines.append(monic_lead(form.line_form(a0, b0)))
    if exclude is not None:
        ex = monic_lead(exclude).to_text()
        lines = [l for l in lines if l.to_text() != ex]
    return sorted(lines, key=lambda l: l.to_text())


# ---------------------------------------------------------------------------
# curve specifications
# ---------------------------------------------------------------------------


@dataclass
class CurveSpec:
    """A buildable curve: recipe, minimal field, canonical text, degree.

    ``expected`` carries closed-form invariants where the family has them
    (mdr, tau, verdict, exponents); families without a uniform formula leave
    it None and rely on catalog entries for pinned values.  Verdicts here
    are the ones provable from (degree, mdr, tau) alone; the sharper
    maximizing verdict needs an attested singular-point list, so it appears
    only on catalog entries.
    """

    op: str
    params: dict
    field_config: dict
    text: str
    degree: int
    expected: dict | None = None

    def field(self):
        return field_from_config(self.field_config)

    def instantiate(self, field=None) -> Poly:
        fld = field if field is not None else self.field()
        F = parse_poly(self.text, fld)
        if F.degree() != self.degree:
            raise Inconsistent(
                f"built degree {F.degree()} != declared {self.degree}"
            )
        assert_reduced(F)
        return F

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "params": self.params,
            "field": self.field_config,
            "text": self.text,
            "degree": self.degree,
            "expected": self.expected,
        }


_Q = {"kind": "Q"}


def _pow_text(base: str, k: int) -> str:
    body = base if base.isalnum() else f"({base})"
    return body if k == 1 else f"{body}^{k}"


def _free_expected(d: int, r: int) -> dict:
    return {
        "mdr": r,
        "tau": (d - 1) ** 2 - r * (d - 1 - r),
        "verdict": "free",
        "exponents": [r, d - 1 - r],
    }


def build_line_tower(lines, powers, cone_degree: int, variant: str = "with-lines") -> CurveSpec:
    """Powered lines through one point over a cone: prod l_j^k_j - z^d.

    Variants: "base" is the curve itself, "with-lines" multiplies the bare
    lines back in, "with-lines-axis" additionally adds the axis z.  The
    with-lines curves are free with exponents (m-1, d) and (m-1, d+1).
    """
    lines = list(lines)
    powers = [int(k) for k in powers]
    d = int(cone_degree)
    if len(lines) != len(powers):
        raise InputError("one exponent per line is required")
    m = len(lines)
    if m < 2:
        raise OutOfRange("at least two lines are required")
    if d < 2:
        raise OutOfRange("cone degree must be at least 2")
    if any(k < 1 for k in powers):
        raise OutOfRange("line exponents must be positive")
    if sum(powers) != d:
        raise DegreeMismatch(f"line exponents sum to {sum(powers)}, expected {d}")
    parsed = []
    for text in lines:
        l = parse_poly(text, field_from_config(_Q))
        if l.degree() != 1 or l.degree_in(2) != 0:
            raise InputError(f"not a linear form in x, y: {text}")
        parsed.append(monic_lead(l))
    for i in range(m):
        for j in range(i + 1, m):
            if (parsed[i] - parsed[j]).is_zero():
                raise InputError("lines must be pairwise non-proportional")
    ltexts = [l.to_text() for l in parsed]
    core = "*".join(_pow_text(t, k) for t, k in zip(ltexts, powers)) + f"-z^{d}"
    product = "*".join(_pow_text(t, 1) for t in ltexts)
    params = {"lines": ltexts, "powers": powers, "cone_degree": d, "variant": variant}
    if variant == "base":
        return CurveSpec("line_tower", params, _Q, core, d, None)
    if variant == "with-lines":
        tau = d * (d - 1) + m * d + (m - 1) ** 2
        expected = {"mdr": m - 1, "tau": tau, "verdict": "free", "exponents": [m - 1, d]}
        return CurveSpec("line_tower", params, _Q, f"{product}*({core})", d + m, expected)
    if variant == "with-lines-axis":
        expected = _free_expected(d + m + 1, m - 1)
        return CurveSpec(
            "line_tower", params, _Q, f"z*{product}*({core})", d + m + 1, expected
        )
    raise UnknownEntry(f"unknown line tower variant: {variant}")


def build_fermat_family(d: int, variant: str) -> CurveSpec:
    """Fermat curve x^d + y^d + z^d with cones over its colinear flexes,
    coordinate lines, and the dual-flavoured monomial triple."""
    d = int(d)
    if d < 2:
        raise OutOfRange("exponent must be at least 2")
    base = f"x^{d}+y^{d}+z^{d}"
    cones = [f"(x^{d}+y^{d})", f"(y^{d}+z^{d})", f"(x^{d}+z^{d})"]
    dual = [f"(x^{d}-y^{d})", f"(y^{d}-z^{d})", f"(x^{d}-z^{d})"]
    texts = {
        "base": (base, d, {"mdr": d - 1, "tau": 0, "verdict": "other", "exponents": None}),
        "one-cone": (
            f"{cones[0]}*({base})",
            2 * d,
            {
                "mdr": d - 1,
                "tau": 3 * d * (d - 1) + 1,
                "verdict": "free",
                "exponents": [d - 1, d],
            },
        ),
        "one-cone-axis": (
            f"z*{cones[0]}*({base})",
            2 * d + 1,
            {
                "mdr": d - 1,
                "tau": 3 * d * d + 1,
                "verdict": "free",
                "exponents": [d - 1, d + 1],
            },
        ),
        "two-cones": (
            f"{cones[0]}*{cones[1]}*({base})",
            3 * d,
            {
                "mdr": d + 1,
                "tau": (3 * d - 1) ** 2 - (d + 1) * (2 * d - 2) - 1,
                "verdict": "nearly_free",
                "exponents": [d + 1, 2 * d - 1],
            },
        ),
        "three-cones": (f"{cones[0]}*{cones[1]}*{cones[2]}*({base})", 4 * d, None),
        "cone-triple": ("*".join(cones), 3 * d, None),
        "cone-triple-dual": ("*".join(dual), 3 * d, None),
        "grid": ("x*y*z*" + "*".join(cones), 3 * d + 3, None),
        "grid-base": (
            "x*y*z*" + "*".join(cones) + f"*({base})",
            4 * d + 3,
            _free_expected(4 * d + 3, 2 * d + 1),
        ),
        "grid-base-partial": (
            f"x*y*{cones[1]}*{cones[2]}*({base})",
            3 * d + 2,
            _free_expected(3 * d + 2, d + 1),
        ),
    }
    if variant not in texts:
        raise UnknownEntry(f"unknown fermat variant: {variant}")
    text, degree, expected = texts[variant]
    return CurveSpec(
        "fermat_family", {"d": d, "variant": variant}, _Q, text, degree, expected
    )


def build_cross_family(m: int, variant: str) -> CurveSpec:
    """The symmetric curve x^m y^m + y^m z^m + x^m z^m and its cone and
    coordinate-line extensions."""
    m = int(m)
    if m < 2:
        raise OutOfRange("exponent must be at least 2")
    core = f"x^{m}*y^{m}+y^{m}*z^{m}+x^{m}*z^{m}"
    texts = {
        "base": (
            core,
            2 * m,
            {"mdr": m + 1, "tau": 3 * (m - 1) ** 2, "verdict": "other", "exponents": None},
        ),
        "two-cones": (
            f"({core})*(x^{m}+y^{m})*(y^{m}+z^{m})",
            4 * m,
            _free_expected(4 * m, 2 * m - 1),
        ),
        "cone-axes": (
            f"y*z*({core})*(y^{m}+z^{m})",
            3 * m + 2,
            _free_expected(3 * m + 2, m + 1),
        ),
        "triangle": (f"x*y*z*({core})", 2 * m + 3, _free_expected(2 * m + 3, m + 1)),
    }
    if variant not in texts:
        raise UnknownEntry(f"unknown cross variant: {variant}")
    text, degree, expected = texts[variant]
    return CurveSpec(
        "cross_family", {"m": m, "variant": variant}, _Q, text, degree, expected
    )


def build_ciani(lam: str = "0") -> CurveSpec:
    """Quartic pencil x^4 + y^4 + z^4 + lam*(y^2 z^2 + x^2 z^2 + x^2 y^2)."""
    lam = str(lam)
    value = parse_scalar(field_from_config(_Q), lam)
    if field_from_config(_Q).is_zero(value):
        text = "x^4+y^4+z^4"
    else:
        text = f"x^4+y^4+z^4+({lam})*(y^2*z^2+x^2*z^2+x^2*y^2)"
    expected = None
    if lam in ("0", "3"):
        # smooth members; generic lam is smooth too but only these are pinned
        expected = {"mdr": 3, "tau": 0, "verdict": "other", "exponents": None}
    return CurveSpec("ciani", {"lam": lam}, _Q, text, 4, expected)


# Smallest field containing the tangency parameters delta with
# delta^m = (-1)^(m+1), for the conic-line family; m odd always has the
# rational parameter delta = 1.
_CONICLINE_EXT = {
    2: "t^2+1",
    3: "t^2+t+1",
    4: "t^4+1",
    5: "t^4+t^3+t^2+t+1",
}


def build_conicline(m: int, j: int) -> CurveSpec:
    """Tangent conics in a pencil with j - 1 tangent lines from the axis.

    The base curve x^(2m) + (xz + y^2)^m is a product of m smooth conics
    x^2 + delta*(xz + y^2), all tangent to x = 0 at the same point; C_1 adds
    that common tangent, and C_j for j <= m adds the second tangent from
    q = (0:1:0) to each of the first j - 1 conics in turn.  At j = m + 1 the
    added lines multiply out to the rational form x^m + z^m.  All members
    are free with exponents (1, 2m-2), (1, 2m-1), then (j, 2m-1).
    """
    m = int(m)
    j = int(j)
    if m < 2:
        raise OutOfRange("at least two conics are required")
    if not 0 <= j <= m + 1:
        raise OutOfRange(f"line count must lie in 0..{m + 1}")
    base = f"x^{2 * m}+(x*z+y^2)^{m}"
    params = {"m": m, "j": j}
    if j == 0:
        return CurveSpec("conicline", params, _Q, base, 2 * m, _free_expected(2 * m, 1))
    if j == 1:
        return CurveSpec(
            "conicline", params, _Q, f"x*({base})", 2 * m + 1, _free_expected(2 * m + 1, 1)
        )
    expected = _free_expected(2 * m + j, j)
    if j == m + 1:
        text = f"x*(x^{m}+z^{m})*({base})"
        return CurveSpec("conicline", params, _Q, text, 2 * m + j, expected)
    # tangency parameters: roots of u^m - (-1)^(m+1); m odd has the
    # rational root 1, so j = 2 stays over Q
    rational_roots = 1 if m % 2 == 1 else 0
    if j - 1 <= rational_roots:
        cfg = _Q
    else:
        if m not in _CONICLINE_EXT:
            raise OutOfRange(f"no built-in splitting field for m = {m}")
        cfg = {"kind": "ext", "base": _Q, "minpoly": _CONICLINE_EXT[m]}
    fld = field_from_config(cfg)
    sign = fld.one if m % 2 == 1 else fld.neg(fld.one)
    coeffs = [fld.neg(sign)] + [fld.zero] * (m - 1) + [fld.one]
    roots, _residual = uni.roots_with_multiplicity(fld, coeffs)
    if len(roots) < j - 1:
        raise NotSplit(f"u^{m}{'-' if m % 2 else '+'}1")
    deltas = sorted((r for r, _mult in roots), key=fld.to_str)[: j - 1]
    bundle = parse_poly("x*z+y^2", fld, homogeneous=False)
    xsq = parse_poly("x^2", fld)
    axis = parse_poly("x", fld)
    qpt = (fld.zero, fld.one, fld.zero)
    factors = ["x"]
    seen = set()
    for delta in deltas:
        conic = xsq + bundle.scale(delta)
        tangents = conic_tangents_from_point(conic, qpt, exclude=axis)
        if len(tangents) != 1:
            raise TangencyDegenerate("expected exactly one tangent besides the axis")
        t = tangents[0].to_text()
        if t in seen:
            raise TangencyDegenerate(f"tangent line {t} repeats")
        seen.add(t)
        factors.append(f"({t})")
    text = "*".join(factors) + f"*({base})"
    return CurveSpec("conicline", params, cfg, text, 2 * m + j, expected)


# named single curves; towers over them are expressed through the "add"
# list of a recipe
_NAMED = {
    "nodal-cubic": (
        "x*y*z+x^3+y^3",
        _Q,
        3,
        {"mdr": 2, "tau": 1, "verdict": "other", "exponents": None},
    ),
    "cuspidal-cubic": (
        "x^2*z+y^3",
        _Q,
        3,
        {"mdr": 1, "tau": 2, "verdict": "nearly_free", "exponents": [1, 2]},
    ),
    "triple-quartic": (
        "(x^3+y^3)*z+x^4+y^4",
        _Q,
        4,
        {"mdr": 2, "tau": 4, "verdict": "other", "exponents": None},
    ),
    "triple-quartic-cone": (
        "(x^3+y^3)*((x^3+y^3)*z+x^4+y^4)",
        _Q,
        7,
        _free_expected(7, 3),
    ),
    "tricuspidal-quartic": (
        "x^2*y^2+y^2*z^2+x^2*z^2-2*x*y*z*(x+y+z)",
        _Q,
        4,
        {"mdr": 2, "tau": 6, "verdict": "nearly_free", "exponents": [2, 2]},
    ),
    "dual-sextic": (
        "(x^2+y^2+z^2)^3-27*x^2*y^2*z^2",
        _Q,
        6,
        {"mdr": 3, "tau": 16, "verdict": "other", "exponents": None},
    ),
}


def _named_spec(name: str) -> CurveSpec:
    if name not in _NAMED:
        raise UnknownEntry(f"unknown named curve: {name}")
    text, cfg, degree, expected = _NAMED[name]
    return CurveSpec("named", {"name": name}, cfg, text, degree, expected)


_BUILDERS = {
    "line_tower": build_line_tower,
    "fermat_family": build_fermat_family,
    "cross_family": build_cross_family,
    "ciani": build_ciani,
    "conicline": build_conicline,
    "named": lambda name: _named_spec(name),
}


def builder_spec(op: str, params: dict) -> CurveSpec:
    """Run the builder named by ``op`` on keyword ``params``."""
    if op not in _BUILDERS:
        raise UnknownEntry(f"unknown builder: {op}")
    return _BUILDERS[op](**params)


def instantiate_recipe(recipe: dict, field=None) -> Poly:
    """Build the polynomial of a recipe: run the builder, instantiate over
    the requested (or minimal) field, then multiply in any "add" lines."""
    spec = builder_spec(recipe.get("op"), recipe.get("params", {}))
    F = spec.instantiate(field)
    extra = recipe.get("add", [])
    for text in extra:
        F = add_line(F, parse_poly(text, F.field))
    if extra:
        assert_reduced(F)
    return F


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    """One verified curve: recipe, fields, and every pinned expectation."""

    id: str
    family: str
    label: str
    builder: dict
    field_config: dict
    text: str
    degree: int
    expected: dict
    point_field_config: dict | None = None
    singular_points: list = dc_field(default_factory=list)
    points_complete: bool = False
    syzygies: list | None = None
    modular_points: list = dc_field(default_factory=list)
    non_modular: list = dc_field(default_factory=list)
    flexes: dict | None = None
    notes: str = ""

    @classmethod
    def from_json(cls, data: dict) -> "CatalogEntry":
        return cls(
            id=data["id"],
            family=data["family"],
            label=data["label"],
            builder=data["builder"],
            field_config=data["field"],
            text=data["text"],
            degree=data["degree"],
            expected=data["expected"],
            point_field_config=data.get("point_field"),
            singular_points=data.get("singular_points", []),
            points_complete=data.get("points_complete", False),
            syzygies=data.get("syzygies"),
            modular_points=data.get("modular_points", []),
            non_modular=data.get("non_modular", []),
            flexes=data.get("flexes"),
            notes=data.get("notes", ""),
        )

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "family": self.family,
            "label": self.label,
            "builder": self.builder,
            "field": self.field_config,
            "text": self.text,
            "degree": self.degree,
            "expected": self.expected,
            "singular_points": self.singular_points,
            "points_complete": self.points_complete,
            "modular_points": self.modular_points,
            "non_modular": self.non_modular,
            "notes": self.notes,
        }
        if self.point_field_config is not None:
            out["point_field"] = self.point_field_config
        if self.syzygies is not None:
            out["syzygies"] = self.syzygies
        if self.flexes is not None:
            out["flexes"] = self.flexes
        return out


def catalog_path() -> Path:
    return Path(__file__).with_name("catalog.json")


def load_catalog(path=None) -> list[CatalogEntry]:
    p = Path(path) if path is not None else catalog_path()
    try:
        data = json.loads(p.read_text())
    except OSError as exc:
        raise CatalogMissing(f"cannot read catalog at {p}: {exc}") from exc
    except ValueError as exc:
        raise CatalogMissing(f"catalog at {p} is not valid JSON: {exc}") from exc
    if data.get("schema") != "freecurve/1":
        raise CatalogMissing(f"unsupported catalog schema: {data.get('schema')!r}")
    return [CatalogEntry.from_json(e) for e in data["entries"]]


def catalog_entry(entry_id: str, path=None) -> CatalogEntry:
    for entry in load_catalog(path):
        if entry.id == entry_id:
            return entry
    raise UnknownEntry(f"no catalog entry named {entry_id}")


def build_named(name: str) -> CatalogEntry:
    """The fully pinned catalog entry for a named curve."""
    return catalog_entry(name)


def instantiate_entry(entry: CatalogEntry, field=None) -> Poly:
    if field is None:
        field = field_from_config(entry.field_config)
    return instantiate_recipe(entry.builder, field)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


_ADE_MU = {"A": lambda k: k, "D": lambda k: k, "E": lambda k: k}


def _label_mu(label: str) -> int | None:
    """Milnor number implied by a singularity label, when it implies one."""
    if label and label[0] in _ADE_MU and label[1:].isdigit():
        return _ADE_MU[label[0]](int(label[1:]))
    if label.startswith("ord-"):
        return (int(label[4:]) - 1) ** 2
    return None


def _is_ade(label: str) -> bool:
    return bool(label) and label[0] in "ADE" and label[1:].isdigit()


@dataclass
class EntryReport:
    """Recomputation record: one row per comparison, plus computed values."""

    entry_id: str
    rows: list  # (check name, ok, detail)
    computed: dict
    seconds: float

    @property
    def ok(self) -> bool:
        return all(ok for _name, ok, _detail in self.rows)

    def to_json(self) -> dict:
        return {
            "entry": self.entry_id,
            "ok": self.ok,
            "checks": [
                {"name": n, "ok": ok, "detail": d} for n, ok, d in self.rows
            ],
            "computed": self.computed,
            "seconds": round(self.seconds, 3),
        }


def saito_pair(F: Poly, r: int):
    """Search the syzygy bases at degrees (r, d-1-r) for a certificate pair."""
    d = F.degree()
    if not 0 <= r <= d - 1 - r:
        return None
    low = syzygy_space(F, r)
    high = low if r == d - 1 - r else syzygy_space(F, d - 1 - r)
    for i, rho1 in enumerate(low):
        for jdx, rho2 in enumerate(high):
            if high is low and jdx <= i:
                continue
            if saito_certificate(F, rho1, rho2):
                return rho1, rho2
    return None


def _point(field, coords):
    return tuple(parse_scalar(field, c) for c in coords)


def verify_entry(entry: CatalogEntry, primes=EVIDENCE_PRIMES, germs=True) -> EntryReport:
    """Recompute every pinned value of a catalog entry from its recipe.

    ``germs`` switches the per-point local checks (and the flex block);
    prime-field evidence runs for each prime in ``primes``.
    """
    start = time.perf_counter()
    rows = []

    def row(name, ok, detail=""):
        rows.append((name, bool(ok), detail))

    field = field_from_config(entry.field_config)
    F = instantiate_recipe(entry.builder, field)
    row("reduced", True, "squarefree line restriction found")
    G = parse_poly(entry.text, field)
    row("text", (G - F).is_zero(), "stored text matches the recipe")
    d = F.degree()
    row("degree", d == entry.degree, f"{d} vs {entry.degree}")

    expected = entry.expected
    r = mdr(F)
    row("mdr", r == expected["mdr"], f"{r} vs {expected['mdr']}")
    tau_exp = expected["tau"]

    verdict_exp = expected["verdict"]
    free_like = verdict_exp in ("free", "maximizing")
    tau_certified = None
    if free_like:
        pair = saito_pair(F, r)
        row("saito", pair is not None, f"certificate pair at degrees ({r}, {d - 1 - r})")
        if pair is not None:
            tau_certified = (d - 1) ** 2 - r * (d - 1 - r)
            row("tau", tau_certified == tau_exp, f"{tau_certified} vs {tau_exp}")

    if entry.syzygies:
        stored = [
            SyzygyVector(
                degree=s["degree"],
                components=tuple(parse_poly(t, field) for t in s["components"]),
            )
            for s in entry.syzygies
        ]
        for k, v in enumerate(stored):
            okv = is_syzygy(F, v) and all(
                c.is_zero() or c.degree() == v.degree for c in v.components
            )
            row(f"syzygy-{k}", okv, f"degree {v.degree}")
        if len(stored) == 2 and stored[0].degree + stored[1].degree == d - 1:
            row("syzygy-saito", saito_certificate(F, stored[0], stored[1]), "")

    pfield_cfg = entry.point_field_config or entry.field_config
    pfield = field_from_config(pfield_cfg)
    FP = F if pfield_cfg == entry.field_config else parse_poly(entry.text, pfield)

    sigma = 0
    ade = bool(entry.singular_points)
    if germs:
        for sp in entry.singular_points:
            P = _point(pfield, sp["point"])
            germ = translate_to_origin(FP, P).germ
            mult = multiplicity(germ)
            mu = milnor_number(germ)
            tau_p = tjurina_local(germ)
            sigma += tau_p
            ok_p = (
                mult == sp["mult"]
                and mu == sp["mu"]
                and tau_p == sp["tau"]
                and (mu == tau_p) == sp["quasi_homogeneous"]
            )
            implied = _label_mu(sp["label"])
            if implied is not None:
                ok_p = ok_p and mu == implied
                if _is_ade(sp["label"]):
                    ok_p = ok_p and mu == tau_p
            name = ":".join(sp["point"])
            row(f"local({name})", ok_p, f"{sp['label']}: m={mult} mu={mu} tau={tau_p}")
            if not _is_ade(sp["label"]):
                ade = False
        if entry.points_complete:
            row("tau-sum", sigma == tau_exp, f"{sigma} vs {tau_exp}")
            if tau_certified is None:
                tau_certified = sigma
    else:
        ade = entry.points_complete and all(
            _is_ade(sp["label"]) for sp in entry.singular_points
        )

    for p in primes:
        Fq = reduce_mod_prime(F, p)
        rq = mdr(Fq)
        tq = global_tjurina(Fq)
        row(f"prime-{p}", rq == r and tq == tau_exp, f"mdr={rq} tau={tq}")
        if tau_certified is None:
            tau_certified = tq

    ade_flag = entry.points_complete and ade
    cls = classify_curve(d, r, tau_exp, ade=ade_flag)
    exps = list(cls.exponents) if cls.exponents is not None else None
    row(
        "classify",
        cls.verdict == verdict_exp and exps == expected["exponents"],
        f"{cls.verdict} {exps}",
    )

    if germs:
        for coords in entry.modular_points:
            rep = is_modular_point(FP, _point(pfield, coords))
            row(f"modular({':'.join(coords)})", rep.is_modular, f"mult {rep.mult}")
        for nm in entry.non_modular:
            rep = is_modular_point(FP, _point(pfield, nm["point"]))
            okw = (not rep.is_modular) and rep.witness_line == nm["witness"]
            row(
                f"non-modular({':'.join(nm['point'])})",
                okw,
                f"witness {rep.witness_line}",
            )
        if entry.modular_points or entry.non_modular:
            candidates = [
                _point(pfield, c) for nm in entry.non_modular for c in [nm["point"]]
            ] + [_point(pfield, c) for c in entry.modular_points]
            found, where = is_supersolvable(FP, candidates)
            row(
                "supersolvable",
                found == bool(entry.modular_points),
                "modular point found" if found else "no candidate is modular",
            )

    if germs and entry.flexes is not None:
        ffield = field_from_config(entry.flexes["field"])
        FF = parse_poly(entry.text, ffield)
        flex_pts = [_point(ffield, fp["point"]) for fp in entry.flexes["points"]]
        for fp, P in zip(entry.flexes["points"], flex_pts):
            k = inflection_order(FF, P)
            row(f"flex({':'.join(fp['point'])})", k == fp["order"], f"order {k}")
        totals = entry.flexes.get("totals")
        if totals is not None:
            sing = [_point(ffield, sp["point"]) for sp in entry.singular_points]
            rep = total_inflection(FF, sing, flex_pts)
            row(
                "flex-totals",
                rep.total == totals["total"]
                and rep.bound == totals["bound"]
                and rep.equality_case == totals["equality"],
                f"total {rep.total}, bound {rep.bound}",
            )

    computed = {
        "degree": d,
        "mdr": r,
        "tau": tau_certified,
        "verdict": cls.verdict,
        "exponents": exps,
        "local_tau_sum": sigma if germs and entry.singular_points else None,
    }
    return EntryReport(entry.id, rows, computed, time.perf_counter() - start)
