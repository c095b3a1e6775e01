"""Dense univariate polynomial arithmetic over a pluggable field.

A polynomial is a list of scalars, lowest degree first, with no trailing
zeros; the zero polynomial is the empty list.  Every function takes the field
object explicitly — nothing here depends on a concrete field implementation,
only on the scalar protocol (add/sub/mul/inv/is_zero/...), which keeps this
module usable by the field layer itself (extension moduli are reduced with
these routines).

Root finding is complete over the rationals (rational-root search on the
cleared-denominator form) and over prime fields (equal-degree splitting with a
seeded generator); over extension fields it is a documented best effort:
small-height candidates, generator monomials, and closed-form quadratics via
field square roots.  Whatever does not split is returned as a residual factor.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import CharDividesExponent

__all__ = [
    "strip",
    "deg",
    "add",
    "sub",
    "neg",
    "scale",
    "mul",
    "divmod_poly",
    "monic",
    "gcd",
    "xgcd",
    "derivative",
    "evaluate",
    "pow_mod",
    "squarefree_part",
    "interpolate",
    "resultant",
    "deflate",
    "roots_with_multiplicity",
    "from_integer_coeffs",
]


def strip(field, c):
    c = list(c)
    while c and field.is_zero(c[-1]):
        c.pop()
    return c


def deg(c) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(c) - 1


def is_zero(c) -> bool:
    return not c


def from_integer_coeffs(field, ints):
    return strip(field, [field.from_int(n) for n in ints])


def add(field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return strip(field, out)


def sub(field, a, b):
    return add(field, a, neg(field, b))


def neg(field, a):
    return [field.neg(x) for x in a]


def scale(field, a, s):
    if field.is_zero(s):
        return []
    return [field.mul(x, s) for x in a]


def mul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return strip(field, out)


def divmod_poly(field, a, b):
    """Quotient and remainder; ``b`` must be nonzero."""
    assert b, "division by the zero polynomial"
    a = list(a)
    q = [field.zero] * max(len(a) - len(b) + 1, 0)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b) and a:
        if field.is_zero(a[-1]):
            a.pop()
            continue
        c = field.mul(a[-1], inv_lead)
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] = field.sub(a[k + i], field.mul(c, bc))
        a.pop()
    return strip(field, q), strip(field, a)


def monic(field, a):
    if not a:
        return []
    if field.eq(a[-1], field.one):
        return list(a)
    return scale(field, a, field.inv(a[-1]))


def gcd(field, a, b):
    """Monic greatest common divisor."""
    a, b = strip(field, a), strip(field, b)
    while b:
        a, b = b, divmod_poly(field, a, b)[1]
    return monic(field, a)


def xgcd(field, a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g (g not normalized)."""
    r0, r1 = strip(field, a), strip(field, b)
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = divmod_poly(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(field, s0, mul(field, q, s1))
        t0, t1 = t1, sub(field, t0, mul(field, q, t1))
    return r0, s0, t0


def derivative(field, a):
    return strip(
        field, [field.mul(field.from_int(i), a[i]) for i in range(1, len(a))]
    )


def evaluate(field, a, x):
    acc = field.zero
    for c in reversed(a):
        acc = field.add(field.mul(acc, x), c)
    return acc


def pow_mod(field, base, e: int, modulus):
    """base^e mod modulus by square-and-multiply."""
    result = [field.one]
    base = divmod_poly(field, base, modulus)[1]
    while e:
        if e & 1:
            result = divmod_poly(field, mul(field, result, base), modulus)[1]
        base = divmod_poly(field, mul(field, base, base), modulus)[1]
        e >>= 1
    return result


def squarefree_part(field, a):
    """Monic product of the distinct irreducible factors of ``a``.

    In characteristic p an exponent divisible by p makes the factor invisible
    to gcd(a, a'); that situation is detected and rejected rather than
    silently dropping factors.
    """
    a = strip(field, a)
    assert a, "squarefree part of the zero polynomial"
    if deg(a) == 0:
        return [field.one]
    d = derivative(field, a)
    if field.char > 0 and not d:
        raise CharDividesExponent(
            f"derivative vanishes in characteristic {field.char}"
        )
    g = gcd(field, a, d)
    sf = monic(field, divmod_poly(field, a, g)[0])
    if field.char > 0 and deg(g) > 0:
        # every factor of g must already divide sf, else a p-th power hid it
        m = g
        while True:
            h = gcd(field, m, sf)
            if deg(h) == 0:
                break
            m = divmod_poly(field, m, h)[0]
        if deg(m) > 0:
            raise CharDividesExponent(
                f"p-th power factor in characteristic {field.char}"
            )
    return sf


def interpolate(field, xs, ys):
    """Newton interpolation through distinct nodes xs with values ys."""
    n = len(xs)
    assert n == len(ys) and n > 0
    coeffs = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            num = field.sub(coeffs[i], coeffs[i - 1])
            den = field.sub(xs[i], xs[i - level])
            coeffs[i] = field.mul(num, field.inv(den))
    poly = []
    for i in range(n - 1, -1, -1):
        # poly = poly*(x - xs[i]) + coeffs[i]
        poly = add(
            field,
            sub(field, shift(field, poly, 1), scale(field, poly, xs[i])),
            [coeffs[i]],
        )
    return poly


def shift(field, a, k: int):
    """Multiply by x^k."""
    if not a:
        return []
    return [field.zero] * k + list(a)


def resultant(field, a, b):
    """Resultant of two univariate polynomials via a Euclidean chain."""
    a, b = strip(field, a), strip(field, b)
    if not a or not b:
        return field.zero
    res = field.one
    while True:
        da, db = deg(a), deg(b)
        if db == 0:
            return field.mul(res, _spow(field, b[0], da))
        if da < db:
            a, b = b, a
            if (da * db) % 2 == 1:
                res = field.neg(res)
            continue
        r = divmod_poly(field, a, b)[1]
        if not r:
            return field.zero
        res = field.mul(res, _spow(field, b[-1], da - deg(r)))
        if (da * db) % 2 == 1:
            res = field.neg(res)
        a, b = b, r


def _spow(field, s, e: int):
    out = field.one
    while e:
        if e & 1:
            out = field.mul(out, s)
        s = field.mul(s, s)
        e >>= 1
    return out


def deflate(field, a, r):
    """Synthetic division by (x - r); returns (quotient, remainder scalar)."""
    q = []
    acc = field.zero
    for c in reversed(a):
        acc = field.add(field.mul(acc, r), c)
        q.append(acc)
    rem = q.pop()
    q.reverse()
    return strip(field, q), rem


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(field, a):
    """All roots in Q of a polynomial with Fraction coefficients."""
    den_lcm = 1
    for c in a:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in a]
    low = 0
    while ints[low] == 0:
        low += 1
    roots = []
    if low > 0:
        roots.append(Fraction(0))
    a0, an = ints[low], ints[-1]
    seen = set()
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                if evaluate(field, a, cand) == 0:
                    roots.append(cand)
    return roots


def _prime_field_roots(field, a):
    p = field.char
    if p <= 4096:
        return [r for r in range(p) if field.is_zero(evaluate(field, a, r))]
    # product of the distinct linear factors: gcd(a, x^p - x)
    xp = pow_mod(field, [field.zero, field.one], p, a)
    lin = gcd(field, sub(field, xp, [field.zero, field.one]), a)
    rng = random.Random(0xF2EE ^ p ^ deg(a))
    return sorted(_split_linear(field, lin, rng))


def _split_linear(field, g, rng):
    """Roots of g, which is a squarefree product of linear factors mod p."""
    if deg(g) <= 0:
        return []
    if deg(g) == 1:
        return [field.mul(field.neg(g[0]), field.inv(g[1]))]
    p = field.char
    while True:
        shift_by = rng.randrange(p)
        probe = pow_mod(
            field, [shift_by % p, field.one], (p - 1) // 2, g
        )
        h = gcd(field, sub(field, probe, [field.one]), g)
        if 0 < deg(h) < deg(g):
            rest = divmod_poly(field, g, h)[0]
            return _split_linear(field, h, rng) + _split_linear(field, rest, rng)


def _extension_candidates(field):
    small = [field.from_int(n) for n in range(-6, 7)]
    gens = []
    t = field.gen_value
    power = field.one
    for _ in range(field.degree - 1):
        power = field.mul(power, t)
        gens.append(power)
    out = list(small)
    for g in gens:
        for s in small:
            out.append(field.mul(s, g))
            out.append(field.add(field.one, field.mul(s, g)))
            out.append(field.sub(field.mul(s, g), field.one))
    return out


def _quadratic_roots(field, a):
    """Roots of a degree-2 polynomial via the field's square root, if any."""
    c, b, q = a[0], a[1], a[2]
    disc = field.sub(field.mul(b, b), field.mul(field.from_int(4), field.mul(q, c)))
    s = field.sqrt(disc)
    if s is None:
        return []
    inv2q = field.inv(field.mul(field.from_int(2), q))
    r1 = field.mul(field.sub(s, b), inv2q)
    r2 = field.mul(field.sub(field.neg(s), b), inv2q)
    return [r1] if field.eq(r1, r2) else [r1, r2]


def _extension_roots(field, a):
    # small extensions of prime fields can simply be enumerated
    if field.char > 0 and field.char ** field.degree <= 4096:
        elems = [field.zero]
        basis = [field.from_int(1)]
        t = field.gen_value
        for _ in range(field.degree - 1):
            basis.append(field.mul(basis[-1], t))
        def expand(prefix, k):
            if k == len(basis):
                yield prefix
                return
            for c in range(field.char):
                term = field.mul(field.from_int(c), basis[k])
                yield from expand(field.add(prefix, term), k + 1)
        return [
            x
            for x in expand(field.zero, 0)
            if field.is_zero(evaluate(field, a, x))
        ]
    roots = []
    work = list(a)
    changed = True
    while changed and deg(work) > 0:
        changed = False
        for cand in _extension_candidates(field):
            if field.is_zero(evaluate(field, work, cand)):
                roots.append(cand)
                work = deflate(field, work, cand)[0]
                changed = True
                break
    while deg(work) == 2 and field.char != 2:
        found = _quadratic_roots(field, work)
        if not found:
            break
        for r in found:
            roots.append(r)
            work = deflate(field, work, r)[0]
    if deg(work) == 1:
        roots.append(field.mul(field.neg(work[0]), field.inv(work[1])))
    return roots


def roots_with_multiplicity(field, a):
    """All field roots of ``a`` with multiplicities, plus the unsplit residual.

    Returns ``(pairs, residual)`` where pairs is a list of (root, multiplicity)
    and residual is the monic cofactor with no roots found in the field.  Over
    Q and prime fields the residual genuinely has no field roots; over
    extension fields the search is best-effort (see module docstring).
    """
    a = strip(field, a)
    assert a, "roots of the zero polynomial"
    if deg(a) == 0:
        return [], [field.one]
    kind = field.kind
    if kind == "Q":
        distinct = _rational_roots(field, a)
    elif kind == "Fp":
        distinct = _prime_field_roots(field, a)
    else:
        distinct = _extension_roots(field, a)
    pairs = []
    work = list(a)
    for r in distinct:
        m = 0
        while True:
            q, rem = deflate(field, work, r)
            if not field.is_zero(rem):
                break
            work = q
            m += 1
        if m:
            pairs.append((r, m))
    return pairs, monic(field, work)
