"""Univariate helpers: division, gcd, roots, resultants, interpolation."""

import random

import pytest

from freecurve import univariate as uni
from freecurve.fields import QQ, Extension, PrimeField

F13 = PrimeField(13)


def poly(field, *ints):
    return uni.strip(field, [field.from_int(c) for c in ints])


def test_divmod_reconstructs():
    a = poly(QQ, 3, 0, -2, 1, 4)
    b = poly(QQ, 1, 2)
    q, r = uni.divmod_poly(QQ, a, b)
    again = uni.add(QQ, uni.mul(QQ, q, b), r)
    assert again == a
    assert uni.deg(r) < uni.deg(b)


def test_gcd_of_products():
    rng = random.Random(5)
    for field in (QQ, F13):
        for _ in range(20):
            a = poly(field, *[rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
            b = poly(field, *[rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
            c = poly(field, *[rng.randint(-4, 4) for _ in range(rng.randint(2, 4))])
            if not a or not b or not c:
                continue
            g = uni.gcd(field, uni.mul(field, a, c), uni.mul(field, b, c))
            # gcd picks up at least the common factor c
            _, r = uni.divmod_poly(field, g, uni.monic(field, c))
            assert not r


def test_roots_with_multiplicity():
    # (x-1)^2 (x+2) over Q
    f = uni.mul(QQ, poly(QQ, 1, -2, 1), poly(QQ, 2, 1))
    roots, residual = uni.roots_with_multiplicity(QQ, f)
    assert sorted((QQ.to_str(r), m) for r, m in roots) == [("-2", 1), ("1", 2)]
    assert uni.deg(residual) == 0

    # x^2+1 has no rational roots but splits over Q(i)
    f = poly(QQ, 1, 0, 1)
    roots, residual = uni.roots_with_multiplicity(QQ, f)
    assert roots == []
    assert uni.deg(residual) == 2
    qi = Extension(QQ, "t^2+1")
    roots, residual = uni.roots_with_multiplicity(qi, poly(qi, 1, 0, 1))
    assert len(roots) == 2
    assert uni.deg(residual) == 0


def test_resultant_multiplicativity():
    rng = random.Random(6)
    for field in (QQ, F13):
        for _ in range(25):
            a = poly(field, *[rng.randint(-3, 3) for _ in range(rng.randint(2, 4))])
            b = poly(field, *[rng.randint(-3, 3) for _ in range(rng.randint(2, 4))])
            c = poly(field, *[rng.randint(-3, 3) for _ in range(rng.randint(2, 4))])
            if uni.deg(a) < 1 or uni.deg(b) < 1 or uni.deg(c) < 1:
                continue
            lhs = uni.resultant(field, a, uni.mul(field, b, c))
            rhs = field.mul(uni.resultant(field, a, b), uni.resultant(field, a, c))
            assert field.eq(lhs, rhs)


def test_resultant_detects_common_root():
    a = poly(QQ, -2, 1)  # x - 2
    b = uni.mul(QQ, a, poly(QQ, 1, 1))
    assert QQ.is_zero(uni.resultant(QQ, a, b))
    assert not QQ.is_zero(uni.resultant(QQ, a, poly(QQ, 1, 1)))


def test_interpolation_round_trip():
    f = poly(QQ, 2, -1, 0, 3)
    xs = [QQ.from_int(i) for i in range(uni.deg(f) + 1)]
    ys = [uni.evaluate(QQ, f, x) for x in xs]
    assert uni.interpolate(QQ, xs, ys) == f


def test_squarefree_part_drops_multiplicity():
    f = uni.mul(QQ, poly(QQ, 1, -2, 1), poly(QQ, 2, 1))  # (x-1)^2 (x+2)
    sf = uni.monic(QQ, uni.squarefree_part(QQ, f))
    assert sf == uni.monic(QQ, uni.mul(QQ, poly(QQ, -1, 1), poly(QQ, 2, 1)))


def test_derivative_leibniz():
    rng = random.Random(7)
    for _ in range(15):
        a = poly(QQ, *[rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
        b = poly(QQ, *[rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
        lhs = uni.derivative(QQ, uni.mul(QQ, a, b))
        rhs = uni.add(
            QQ,
            uni.mul(QQ, uni.derivative(QQ, a), b),
            uni.mul(QQ, a, uni.derivative(QQ, b)),
        )
        assert lhs == rhs


def test_pow_mod():
    mod = poly(F13, 1, 0, 1)
    base = poly(F13, 0, 1)
    out = uni.pow_mod(F13, base, 13 * 13, mod)
    # x^2 = -1 mod the modulus, so x^169 = (x^2)^84 * x = x
    assert out == base
