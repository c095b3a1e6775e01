"""Field arithmetic: axioms on every kind, parsing, and the prime test."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freecurve.errors import InputError, ZeroInverse
from freecurve.fields import QQ, Extension, PrimeField, field_from_config, is_prime, parse_scalar

F97 = PrimeField(97)
QI = Extension(QQ, "t^2+1")

rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
fp_elems = st.integers(0, 96).map(F97.from_int)
qi_elems = st.tuples(rationals, rationals)

elements = st.one_of(
    st.tuples(st.just(QQ), rationals, rationals, rationals),
    st.tuples(st.just(F97), fp_elems, fp_elems, fp_elems),
    st.tuples(st.just(QI), qi_elems, qi_elems, qi_elems),
)


@given(elements)
@settings(max_examples=150, deadline=None)
def test_ring_axioms(data):
    field, a, b, c = data
    assert field.eq(field.add(a, b), field.add(b, a))
    assert field.eq(field.mul(a, b), field.mul(b, a))
    assert field.eq(field.add(field.add(a, b), c), field.add(a, field.add(b, c)))
    assert field.eq(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)))
    assert field.eq(
        field.mul(a, field.add(b, c)),
        field.add(field.mul(a, b), field.mul(a, c)),
    )
    assert field.eq(field.add(a, field.neg(a)), field.zero)
    assert field.eq(field.mul(a, field.one), a)
    assert field.eq(field.sub(a, b), field.add(a, field.neg(b)))


@given(elements)
@settings(max_examples=150, deadline=None)
def test_multiplicative_inverse(data):
    field, a, _, _ = data
    if field.is_zero(a):
        with pytest.raises(ZeroInverse):
            field.inv(a)
    else:
        assert field.eq(field.mul(a, field.inv(a)), field.one)


@given(elements)
@settings(max_examples=100, deadline=None)
def test_scalar_text_round_trip(data):
    field, a, _, _ = data
    assert field.eq(parse_scalar(field, field.to_str(a)), a)


def test_from_int_is_a_homomorphism():
    for field in (QQ, F97, QI):
        for a in (-7, 0, 3, 12):
            for b in (-2, 5):
                assert field.eq(
                    field.from_int(a * b), field.mul(field.from_int(a), field.from_int(b))
                )
                assert field.eq(
                    field.from_int(a + b), field.add(field.from_int(a), field.from_int(b))
                )


def test_extension_generator_satisfies_modulus():
    for text, check in [
        ("t^2+1", lambda k, t: k.eq(k.mul(t, t), k.neg(k.one))),
        ("t^2+t+1", lambda k, t: k.is_zero(k.add(k.add(k.mul(t, t), t), k.one))),
        ("t^4+1", lambda k, t: k.eq(k.pow(t, 4), k.neg(k.one))),
    ]:
        k = Extension(QQ, text)
        assert check(k, k.gen_value)


def test_extension_modulus_validation():
    with pytest.raises(InputError):
        Extension(QQ, "t+1")  # degree too small
    with pytest.raises(InputError):
        Extension(QQ, "2*t^2+1")  # not monic
    with pytest.raises(InputError):
        Extension(QQ, "t^2+2*t+1")  # not squarefree


def test_field_config_round_trip():
    for field in (QQ, PrimeField(13), QI, Extension(QQ, "t^4+1")):
        again = field_from_config(field.config())
        assert again.kind == field.kind
        assert again.to_str(again.from_int(5)) == field.to_str(field.from_int(5))
        if field.kind == "ext":
            assert again.minpoly == field.minpoly


def test_prime_field_requires_prime():
    with pytest.raises(InputError):
        PrimeField(91)


PRIME_TABLE = [
    (2, True), (3, True), (4, False), (97, True), (561, False),
    (2147483629, True), (2147483497, True), (2147483353, True),
    (2_147_483_647, True), (25326001, False),
]


def test_is_prime_table():
    for n, want in PRIME_TABLE:
        assert is_prime(n) == want, n
