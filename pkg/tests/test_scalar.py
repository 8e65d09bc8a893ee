from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flatlim.scalar import (
    QQ,
    FieldMismatchError,
    PrimeField,
    field_from_spec,
    format_rational,
    is_prime,
    parse_rational,
)

PRIMES = [2, 3, 5, 7, 101, 32003, 2**31 - 1]


def test_is_prime_small_range():
    naive = [n for n in range(200) if n > 1 and all(n % k for k in range(2, n))]
    assert [n for n in range(200) if is_prime(n)] == naive


def test_large_prime():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)


@pytest.mark.parametrize("text,value", [("3", 3), ("-3/6", Fraction(-1, 2)), (" 4/2 ", 2), ("0", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "a", "1//2", "1/2/3"])
def test_parse_rational_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(text)


@given(st.fractions())
def test_rational_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_field_specs():
    assert field_from_spec("q") is QQ or field_from_spec("q") == QQ
    assert field_from_spec("p=7") == PrimeField(7)
    assert field_from_spec("p=7").spec() == "p=7"
    for bad in ["p=8", "p=1", "r", "p=x"]:
        with pytest.raises(ValueError):
            field_from_spec(bad)


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(91)


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    F = PrimeField(p)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == F.zero
    assert int(x) == a % p
    if x:
        assert x * x.inverse() == F.one
        assert (y / x) * x == y
    assert x ** (p - 1) == (F.one if x else F.zero)


def test_prime_field_zero_division():
    F = PrimeField(5)
    with pytest.raises(ZeroDivisionError):
        F(5).inverse()


def test_prime_field_mixing_raises():
    with pytest.raises(FieldMismatchError):
        PrimeField(5)(1) + PrimeField(7)(1)


def test_prime_field_rationals():
    F = PrimeField(7)
    assert F(Fraction(1, 2)) * 2 == F.one


def test_prime_field_element_immutable():
    x = PrimeField(5)(2)
    with pytest.raises(AttributeError):
        x.residue = 3
