"""Exact coefficient arithmetic.

Three ground fields are supported: arbitrary-precision rationals, prime fields
of word-size characteristic, and algebraic extensions by a monic squarefree
modulus.  Scalars are plain immutable values in canonical form — reduced
``Fraction`` with positive denominator, residues in ``[0, p)``, and tuples of
base scalars of fixed length for extensions — so Python equality coincides
with field equality and values hash correctly in term maps.

Extension moduli are allowed to be squarefree without being irreducible: the
catalog uses roots of t^d + 1, which is reducible for most d.  Inverting a
zero divisor then fails loudly with the discovered modulus factor
(:class:`~freecurve.errors.ZeroDivisor`) so the caller can restart over the
smaller field, instead of silently computing garbage.

Nesting is capped where the catalog needs it: at most one extension level over
a prime field, two over the rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import univariate as uni
from .errors import InputError, OutOfRange, ParseError, ZeroDivisor, ZeroInverse
from .parse import parse_integer_terms

__all__ = [
    "is_prime",
    "Field",
    "Rationals",
    "PrimeField",
    "Extension",
    "QQ",
    "field_from_config",
    "parse_scalar",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller–Rabin, valid for every n < 2^64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Shared scalar protocol; concrete fields fill in the operations.

    Attributes:
        kind: "Q", "Fp" or "ext".
        char: characteristic (0 or p).
    """

    kind: str
    char: int

    # concrete classes define: zero, one, add, sub, mul, neg, inv, from_int,
    # is_zero, eq, to_str, sqrt, config, _key

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def prod(self, values):
        out = self.one
        for v in values:
            out = self.mul(out, v)
        return out

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<field {self.to_text()}>"

    def to_text(self) -> str:
        raise NotImplementedError


class Rationals(Field):
    kind = "Q"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroInverse("1/0 over the rationals")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def to_str(self, a) -> str:
        return str(a)

    def sqrt(self, a):
        if a < 0:
            return None
        num, den = a.numerator, a.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return None

    def config(self) -> dict:
        return {"kind": "Q"}

    def _key(self):
        return ("Q",)

    def to_text(self) -> str:
        return "Q"


QQ = Rationals()


class PrimeField(Field):
    kind = "Fp"

    def __init__(self, p: int):
        if not (2 <= p < 2**62):
            raise OutOfRange(f"prime out of range: {p}")
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroInverse(f"1/0 over GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n: int):
        return n % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def eq(self, a, b) -> bool:
        return (a - b) % self.p == 0

    def to_str(self, a) -> str:
        return str(a % self.p)

    def sqrt(self, a):
        p = self.p
        a %= p
        if a == 0:
            return 0
        if p == 2:
            return a
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        # Tonelli–Shanks
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, tt = 0, t
            while tt != 1:
                tt = tt * tt % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r

    def config(self) -> dict:
        return {"kind": "Fp", "p": self.p}

    def _key(self):
        return ("Fp", self.p)

    def to_text(self) -> str:
        return f"GF({self.p})"


class Extension(Field):
    """Simple algebraic extension base[t]/(minpoly).

    ``minpoly`` is either text in the generator ("t^2+1") or a list of base
    scalars, lowest degree first; it must be monic of degree >= 2 and
    squarefree.  Elements are tuples of base scalars of length ``degree``
    (residue-class polynomials in the generator).
    """

    kind = "ext"

    def __init__(self, base: Field, minpoly, gen: str = "t"):
        if isinstance(base, Extension):
            if base.base.kind != "Q":
                raise InputError(
                    "extensions nest at most one level over a prime field"
                )
        self.base = base
        self.gen = gen
        self.char = base.char
        if isinstance(minpoly, str):
            minpoly = _minpoly_coeffs(base, minpoly, gen)
        mp = uni.strip(base, [m for m in minpoly])
        if uni.deg(mp) < 2:
            raise InputError("extension modulus must have degree >= 2")
        if not base.eq(mp[-1], base.one):
            raise InputError("extension modulus must be monic")
        g = uni.gcd(base, mp, uni.derivative(base, mp))
        if uni.deg(g) != 0:
            raise InputError("extension modulus must be squarefree")
        self.minpoly = tuple(mp)
        self.degree = uni.deg(mp)
        d = self.degree
        self.zero = tuple([base.zero] * d)
        self.one = tuple([base.one] + [base.zero] * (d - 1))
        self.gen_value = tuple(
            base.one if i == 1 else base.zero for i in range(d)
        )
        # reduction table: t^(d+k) mod minpoly for k = 0 .. d-2
        table = []
        current = [base.neg(c) for c in mp[:-1]]  # t^d
        table.append(list(current))
        for _ in range(d - 2):
            current = [base.zero] + current
            lead = current.pop()
            if not base.is_zero(lead):
                for i in range(d):
                    current[i] = base.add(
                        current[i], base.mul(lead, table[0][i])
                    )
            table.append(list(current))
        self._pow_table = table

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a, b):
        base, d = self.base, self.degree
        conv = [base.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                conv[i + j] = base.add(conv[i + j], base.mul(x, y))
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if base.is_zero(c):
                continue
            row = self._pow_table[k - d]
            for i in range(d):
                out[i] = base.add(out[i], base.mul(c, row[i]))
        return tuple(out)

    def inv(self, a):
        base = self.base
        if self.is_zero(a):
            raise ZeroInverse(f"1/0 over {self.to_text()}")
        g, s, _ = uni.xgcd(base, uni.strip(base, list(a)), list(self.minpoly))
        if uni.deg(g) == 0:
            c = base.inv(g[0])
            s = [base.mul(c, x) for x in s]
            s = uni.divmod_poly(base, s, list(self.minpoly))[1]
            return tuple(s + [base.zero] * (self.degree - len(s)))
        factor = uni.monic(base, g)
        raise ZeroDivisor(_poly_text(base, factor, self.gen))

    def from_int(self, n: int):
        return tuple(
            [self.base.from_int(n)] + [self.base.zero] * (self.degree - 1)
        )

    def is_zero(self, a) -> bool:
        return all(self.base.is_zero(x) for x in a)

    def eq(self, a, b) -> bool:
        return all(self.base.eq(x, y) for x, y in zip(a, b))

    def to_str(self, a) -> str:
        return _poly_text(self.base, uni.strip(self.base, list(a)), self.gen)

    def sqrt(self, a):
        if self.is_zero(a):
            return self.zero
        if self.degree == 2 and self.char != 2:
            r = self._sqrt_quadratic(a)
            if r is not None:
                return r
        # fall back to candidate probing: base values and generator monomials
        base_root = None
        if all(self.base.is_zero(x) for x in a[1:]):
            base_root = self.base.sqrt(a[0])
        if base_root is not None:
            return self.from_base(base_root)
        for k in range(1, self.degree):
            mono = self.pow(self.gen_value, k)
            for n in range(-9, 10):
                if n == 0:
                    continue
                cand = self.mul(self.from_int(n), mono)
                if self.eq(self.mul(cand, cand), a):
                    return cand
        return None

    def _sqrt_quadratic(self, a):
        # solve (x + y t)^2 = c0 + c1 t over the base, t^2 = -u t - w
        base = self.base
        u, w = self.minpoly[1], self.minpoly[0]
        c0, c1 = a[0], a[1]
        two = base.from_int(2)
        four = base.from_int(4)

        def check(x, y):
            cand = (x, y)
            return cand if self.eq(self.mul(cand, cand), a) else None

        if base.is_zero(c1):
            x = base.sqrt(c0)
            if x is not None:
                return (x, base.zero)
            # off-base candidate: x = u y / 2, so y^2 (u^2 - 4w) = 4 c0
            den = base.sub(base.mul(u, u), base.mul(four, w))
            if not base.is_zero(den):
                y = base.sqrt(base.div(base.mul(four, c0), den))
                if y is not None:
                    got = check(base.div(base.mul(u, y), two), y)
                    if got is not None:
                        return got
            return None
        # c1 != 0: eliminate x = (c1 + u y^2)/(2 y); Y = y^2 satisfies
        #   (u^2 - 4w) Y^2 + (2 u c1 - 4 c0) Y + c1^2 = 0
        A = base.sub(base.mul(u, u), base.mul(four, w))
        B = base.sub(base.mul(two, base.mul(u, c1)), base.mul(four, c0))
        C = base.mul(c1, c1)
        for Y in _base_quadratic_roots(base, A, B, C):
            y = base.sqrt(Y)
            if y is None or base.is_zero(y):
                continue
            x = base.div(
                base.add(c1, base.mul(u, base.mul(y, y))), base.mul(two, y)
            )
            for sign in (1, -1):
                ys = y if sign == 1 else base.neg(y)
                xs = x if sign == 1 else base.neg(x)
                got = check(xs, ys)
                if got is not None:
                    return got
        return None

    def from_base(self, b):
        return tuple([b] + [self.base.zero] * (self.degree - 1))

    def config(self) -> dict:
        return {
            "kind": "ext",
            "base": self.base.config(),
            "minpoly": _poly_text(self.base, list(self.minpoly), self.gen),
        }

    def _key(self):
        return ("ext", self.base._key(), self.minpoly)

    def to_text(self) -> str:
        mp = _poly_text(self.base, list(self.minpoly), self.gen)
        return f"{self.base.to_text()}[{self.gen}]/({mp})"


def _base_quadratic_roots(base, A, B, C):
    """Roots in the base field of A Y^2 + B Y + C (A may be zero)."""
    if base.is_zero(A):
        if base.is_zero(B):
            return []
        return [base.div(base.neg(C), B)]
    disc = base.sub(base.mul(B, B), base.mul(base.from_int(4), base.mul(A, C)))
    s = base.sqrt(disc)
    if s is None:
        return []
    inv2a = base.inv(base.mul(base.from_int(2), A))
    return [
        base.mul(base.sub(s, B), inv2a),
        base.mul(base.sub(base.neg(s), B), inv2a),
    ]


def _atomic(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return not any(op in body for op in "+-*")


def _poly_text(base, coeffs, var: str) -> str:
    """Canonical text of a univariate polynomial, highest degree first."""
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if base.is_zero(c):
            continue
        ctext = base.to_str(c)
        if k == 0:
            piece = ctext if _atomic(ctext) else f"({ctext})"
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if base.eq(c, base.one):
                piece = mono
            elif base.eq(c, base.neg(base.one)):
                piece = f"-{mono}"
            elif _atomic(ctext):
                piece = f"{ctext}*{mono}"
            else:
                piece = f"({ctext})*{mono}"
        parts.append(piece)
    if not parts:
        return "0"
    out = parts[0]
    for piece in parts[1:]:
        out += piece if piece.startswith("-") else "+" + piece
    return out


def _minpoly_coeffs(base: Field, text: str, gen: str) -> list:
    terms = parse_integer_terms(text, (gen,))
    degree = max((e[0] for e in terms), default=0)
    coeffs = [base.zero] * (degree + 1)
    for (e,), n in terms.items():
        coeffs[e] = base.add(coeffs[e], base.from_int(n))
    return coeffs


def field_from_config(cfg: dict) -> Field:
    """Build a field from its JSON configuration.

    Accepted shapes: {"kind": "Q"}, {"kind": "Fp", "p": prime},
    {"kind": "ext", "base": {...}, "minpoly": "t^2+1"}.
    """
    if not isinstance(cfg, dict) or "kind" not in cfg:
        raise InputError(f"bad field config: {cfg!r}")
    kind = cfg["kind"]
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(int(cfg["p"]))
    if kind == "ext":
        base = field_from_config(cfg["base"])
        return Extension(base, str(cfg["minpoly"]))
    raise InputError(f"unknown field kind: {kind!r}")


def parse_scalar(field: Field, text: str):
    """Parse a scalar literal over ``field``.

    Accepts +, -, *, /, ^, parentheses, integer literals, and the generator
    ``t`` of an extension — a superset of what :meth:`Field.to_str` emits,
    so every canonical form reads back.
    """
    return _ScalarParser(field, text).parse()


class _ScalarParser:
    """Recursive descent directly over field values (division included)."""

    def __init__(self, field: Field, text: str):
        self.field = field
        self.text = text
        self.pos = 0

    def parse(self):
        value = self._expr()
        self._skip_space()
        if self.pos != len(self.text):
            self._fail(f"unexpected character {self.text[self.pos]!r}")
        return value

    def _expr(self):
        field = self.field
        value = self._term()
        while True:
            op = self._peek()
            if op == "+":
                self.pos += 1
                value = field.add(value, self._term())
            elif op == "-":
                self.pos += 1
                value = field.sub(value, self._term())
            else:
                return value

    def _term(self):
        field = self.field
        value = self._factor()
        while True:
            op = self._peek()
            if op == "*":
                self.pos += 1
                value = field.mul(value, self._factor())
            elif op == "/":
                at = self.pos
                self.pos += 1
                divisor = self._factor()
                if field.is_zero(divisor):
                    self.pos = at
                    self._fail("division by zero")
                value = field.div(value, divisor)
            else:
                return value

    def _factor(self):
        field = self.field
        ch = self._peek()
        if ch == "-":
            self.pos += 1
            return field.neg(self._factor())
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return self._power(value)
        if ch is not None and ch.isdigit():
            return self._power(field.from_int(self._integer()))
        if ch == "t" and field.kind == "ext":
            self.pos += 1
            return self._power(field.gen_value)
        self._fail("expected a scalar" if ch is None else f"unexpected character {ch!r}")

    def _power(self, value):
        if self._peek() != "^":
            return value
        self.pos += 1
        if self._peek() is None or not self.text[self.pos].isdigit():
            self._fail("expected an exponent")
        return self.field.pow(value, self._integer())

    def _integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])

    def _peek(self):
        self._skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def _skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _fail(self, message: str):
        raise ParseError(message, self.pos)
