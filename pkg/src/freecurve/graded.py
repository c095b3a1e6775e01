"""Graded linear algebra of the Jacobian ring of a curve.

For F homogeneous of degree d in S = K[x,y,z], the module of syzygies
D0(F)_r consists of triples (a,b,c) of degree-r forms with
a F_x + b F_y + c F_z = 0.  The minimal degree of a nonzero syzygy (mdr),
the Hilbert function of the Milnor algebra S/(F_x,F_y,F_z), the total
Tjurina number (its stable value), and the determinant freeness certificate
are all kernel and rank computations on one family of coefficient matrices,
assembled here degree by degree.

The full derivation module D(F) splits off the Euler derivation,
D(F) = D0(F) + S * delta_E, so only D0(F) is ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatch, InputError, NoStabilization
from .fields import PrimeField
from .linalg import field_nullspace, field_rank, gf_nullspace, gf_rank, int_rank
from .poly import Poly, monomials, partials

__all__ = [
    "SHORTCUT_PRIME",
    "SyzygyVector",
    "MilnorProfile",
    "syzygy_space",
    "mdr",
    "milnor_hilbert",
    "milnor_profile",
    "global_tjurina",
    "saito_certificate",
]

# fixed auxiliary prime for the kernel-emptiness shortcut over Q: an empty
# kernel mod p certifies an empty kernel in characteristic zero
SHORTCUT_PRIME = 2147483629


@dataclass
class SyzygyVector:
    """A derivation a d/dx + b d/dy + c d/dz killing F, homogeneous."""

    degree: int
    components: tuple  # (a, b, c) Polys of the same degree

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "components": [c.to_text() for c in self.components],
        }


@dataclass
class MilnorProfile:
    """Window of Milnor-algebra dimensions and the stabilized value."""

    dims: dict  # degree -> dimension
    stabilized: int | None

    def to_json(self) -> dict:
        return {
            "dims": {str(k): v for k, v in sorted(self.dims.items())},
            "stabilized": self.stabilized,
        }


def _syzygy_matrix(F: Poly, r: int):
    """Rows: degree r+d-1 monomials; columns: 3 blocks of degree-r monomials.

    Column (i, m) holds the coefficients of m * F_i, so kernel vectors are
    exactly the syzygies (a, b, c).
    """
    field = F.field
    d = F.degree()
    Fi = partials(F)
    target = monomials(3, r + d - 1)
    index = {m: i for i, m in enumerate(target)}
    dom = monomials(3, r)
    cols = []
    for P in Fi:
        for m in dom:
            col = [field.zero] * len(target)
            for e, c in P.terms.items():
                key = (e[0] + m[0], e[1] + m[1], e[2] + m[2])
                col[index[key]] = c
            cols.append(col)
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]
    return rows, dom


def syzygy_space(F: Poly, r: int) -> list[SyzygyVector]:
    """Canonical basis of D0(F)_r (reduced row echelon kernel vectors)."""
    assert r >= 0
    field = F.field
    matrix, dom = _syzygy_matrix(F, r)
    if field.kind == "Fp":
        vectors = gf_nullspace([[int(c) for c in row] for row in matrix], field.p)
        vectors = [[field.from_int(c) for c in v] for v in vectors]
    else:
        vectors = field_nullspace(matrix, field)
    out = []
    n = len(dom)
    for v in vectors:
        comps = []
        for i in range(3):
            terms = {}
            for j, m in enumerate(dom):
                c = v[i * n + j]
                if not field.is_zero(c):
                    terms[m] = c
            comps.append(Poly(field, F.vars, terms))
        out.append(SyzygyVector(degree=r, components=tuple(comps)))
    return out


def _kernel_certainly_empty(F: Poly, r: int) -> bool:
    """Mod-p probe: a trivial kernel over F_p certifies one over Q."""
    if F.field.kind != "Q":
        return False
    p = SHORTCUT_PRIME
    for c in F.terms.values():
        if Fraction(c).denominator % p == 0:
            return False
    fp = PrimeField(p)
    Fp = Poly(
        fp,
        F.vars,
        {
            e: fp.from_int(Fraction(c).numerator)
            if Fraction(c).denominator == 1
            else fp.div(
                fp.from_int(Fraction(c).numerator),
                fp.from_int(Fraction(c).denominator),
            )
            for e, c in F.terms.items()
        },
    )
    matrix, _dom = _syzygy_matrix(Fp, r)
    rows = [[int(c) for c in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    return gf_rank(rows, p) == ncols


def mdr(F: Poly) -> int:
    """Minimal degree of a nonzero syzygy; at most d-1 (Koszul)."""
    d = F.degree()
    assert d >= 1
    for r in range(d):
        if _kernel_certainly_empty(F, r):
            continue
        if syzygy_space(F, r):
            return r
    raise AssertionError("Koszul syzygies guarantee mdr <= d-1")


def _jacobian_rows(F: Poly, k: int):
    """Coefficient rows of all degree-k monomial multiples of the partials."""
    field = F.field
    d = F.degree()
    if k < d - 1:
        return [], monomials(3, k)
    target = monomials(3, k)
    index = {m: i for i, m in enumerate(target)}
    rows = []
    for P in partials(F):
        if P.is_zero():
            continue
        for m in monomials(3, k - (d - 1)):
            row = [field.zero] * len(target)
            for e, c in P.terms.items():
                key = (e[0] + m[0], e[1] + m[1], e[2] + m[2])
                row[index[key]] = c
            rows.append(row)
    return rows, target


def milnor_hilbert(F: Poly, k: int) -> int:
    """dim of the degree-k part of the Milnor algebra S/(F_x,F_y,F_z)."""
    assert k >= 0
    field = F.field
    rows, target = _jacobian_rows(F, k)
    if not rows:
        return len(target)
    return len(target) - _graded_rank(field, rows)


def _graded_rank(field, rows) -> int:
    if field.kind == "Fp":
        return gf_rank([[int(c) for c in row] for row in rows], field.p)
    if field.kind == "Q":
        scaled = []
        for row in rows:
            lcm = 1
            for c in row:
                if c:
                    den = Fraction(c).denominator
                    g = _gcd(lcm, den)
                    lcm = lcm * den // g
            scaled.append([int(c * lcm) for c in row])
        return int_rank(scaled)
    return field_rank(rows, field)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def milnor_profile(F: Poly) -> MilnorProfile:
    """Scan dim M(F)_k from k = 3d-6 until two consecutive degrees agree."""
    d = F.degree()
    assert d >= 1
    start = max(0, 3 * d - 6)
    dims: dict[int, int] = {}
    k = start
    prev = milnor_hilbert(F, k)
    dims[k] = prev
    while k + 1 <= 6 * d:
        cur = milnor_hilbert(F, k + 1)
        dims[k + 1] = cur
        if cur == prev:
            return MilnorProfile(dims=dims, stabilized=cur)
        prev = cur
        k += 1
    return MilnorProfile(dims=dims, stabilized=None)


def global_tjurina(F: Poly) -> int:
    """Total Tjurina number: the stable Milnor-algebra dimension.

    Raises NoStabilization when no plateau appears by degree 6d (the input
    is then non-reduced or has non-isolated singularities).
    """
    profile = milnor_profile(F)
    if profile.stabilized is None:
        raise NoStabilization(
            "Milnor algebra dimensions do not stabilize; "
            "input is non-reduced or has non-isolated singularities"
        )
    return profile.stabilized


def is_syzygy(F: Poly, v: SyzygyVector) -> bool:
    Fx, Fy, Fz = partials(F)
    a, b, c = v.components
    return (a * Fx + b * Fy + c * Fz).is_zero()


def saito_certificate(F: Poly, rho1: SyzygyVector, rho2: SyzygyVector) -> bool:
    """Determinant freeness test.

    For syzygies of degrees summing to d-1, the determinant of the matrix
    with rows (x, y, z), rho1, rho2 is a scalar multiple of F; the scalar
    being nonzero certifies freeness with exponents (deg rho1, deg rho2).
    """
    d = F.degree()
    if rho1.degree + rho2.degree != d - 1:
        raise DegreeMismatch(
            f"syzygy degrees {rho1.degree}+{rho2.degree} != {d - 1}"
        )
    for v in (rho1, rho2):
        if not is_syzygy(F, v):
            raise InputError("certificate input is not a syzygy")
    field = F.field
    xyz = [Poly.variable(field, F.vars, v) for v in F.vars]
    a1, b1, c1 = rho1.components
    a2, b2, c2 = rho2.components
    det = (
        xyz[0] * (b1 * c2 - c1 * b2)
        - xyz[1] * (a1 * c2 - c1 * a2)
        + xyz[2] * (a1 * b2 - b1 * a2)
    )
    if det.is_zero():
        return False
    # det must equal c * F exactly for a nonzero scalar c
    e, lead = F.lead()
    det_c = det.coefficient(e)
    if field.is_zero(det_c):
        return False
    ratio = field.div(det_c, lead)
    return (det - F.scale(ratio)).is_zero()
