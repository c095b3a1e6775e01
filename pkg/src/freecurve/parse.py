"""Expression text -> integer term map.

One parser serves every text input in the package: curve equations, extension
moduli, scalar coordinates.  The grammar is deliberately small — ``+ - * ^``,
integer literals, declared variable names, parentheses; ``^`` right-associative
with non-negative integer exponents; implicit multiplication rejected — so the
same text always reparses to the same terms.

The result maps exponent tuples (one slot per declared variable) to integer
coefficients.  Coefficient embedding into a field happens downstream, which
keeps this module dependency-free.
"""

from __future__ import annotations

from .errors import ParseError

__all__ = ["parse_integer_terms"]

_OPS = "+-*^()"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split into (kind, value, position) tokens; kind in {int,name,op}."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, text: str, varnames: tuple[str, ...]):
        self.text = text
        self.varnames = varnames
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        tok = self.next()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])

    # -- grammar ------------------------------------------------------------

    def parse(self) -> dict[tuple[int, ...], int]:
        result = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return result

    def expr(self):
        terms = self.term()
        while True:
            tok = self.peek()
            if tok is not None and tok[0] == "op" and tok[1] in "+-":
                self.next()
                rhs = self.term()
                terms = _add(terms, rhs, -1 if tok[1] == "-" else 1)
            else:
                return terms

    def term(self):
        terms = self.factor()
        while True:
            tok = self.peek()
            if tok is not None and tok[0] == "op" and tok[1] == "*":
                self.next()
                terms = _mul(terms, self.factor(), len(self.varnames))
            elif tok is not None and tok[0] in ("int", "name"):
                raise ParseError(
                    "implicit multiplication is not allowed; write '*'", tok[2]
                )
            elif tok is not None and tok[0] == "op" and tok[1] == "(":
                raise ParseError(
                    "implicit multiplication is not allowed; write '*'", tok[2]
                )
            else:
                return terms

    def factor(self):
        sign = 1
        while True:
            tok = self.peek()
            if tok is not None and tok[0] == "op" and tok[1] in "+-":
                self.next()
                if tok[1] == "-":
                    sign = -sign
            else:
                break
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.next()
            e = self.exponent()
            base = _pow(base, e, len(self.varnames))
        if sign < 0:
            base = {k: -v for k, v in base.items()}
        return base

    def exponent(self) -> int:
        tok = self.next()
        if tok[0] != "int":
            raise ParseError("exponent must be an integer literal", tok[2])
        e = int(tok[1])
        nxt = self.peek()
        if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
            self.next()
            e = e ** self.exponent()
        return e

    def atom(self):
        nv = len(self.varnames)
        tok = self.next()
        if tok[0] == "int":
            return {(0,) * nv: int(tok[1])}
        if tok[0] == "name":
            if tok[1] not in self.varnames:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            exps = tuple(
                1 if name == tok[1] else 0 for name in self.varnames
            )
            return {exps: 1}
        if tok[0] == "op" and tok[1] == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])


def _add(a, b, sign):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + sign * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _mul(a, b, nv):
    out: dict[tuple[int, ...], int] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(ka[i] + kb[i] for i in range(nv))
            w = out.get(k, 0) + va * vb
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def _pow(a, e, nv):
    if e < 0:
        raise ParseError("negative exponents are not allowed", 0)
    out = {(0,) * nv: 1}
    base = a
    while e:
        if e & 1:
            out = _mul(out, base, nv)
        base = _mul(base, base, nv) if e > 1 else base
        e >>= 1
    return out


def parse_integer_terms(
    text: str, varnames: tuple[str, ...]
) -> dict[tuple[int, ...], int]:
    """Parse ``text`` over the given variables into {exponent tuple: int}.

    Raises :class:`~freecurve.errors.ParseError` with the offending position
    on malformed input.
    """
    return _Parser(text, tuple(varnames)).parse()
