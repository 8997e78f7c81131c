from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crosstwist import CharacteristicError, FieldError, PrimeField, Rationals


def test_exactness_thirds():
    f = Rationals()
    third = Fraction(1, 3)
    assert f.add(f.add(third, third), third) == f.one()


def test_rational_parse_canonical():
    f = Rationals()
    assert f.parse("3/4") == Fraction(3, 4)
    assert f.parse("-3/4") == Fraction(-3, 4)
    assert f.parse("0/1") == 0
    assert f.format(Fraction(5)) == "5/1"
    assert f.format(Fraction(-1, 2)) == "-1/2"


@pytest.mark.parametrize("text", ["2/4", "1/-2", "0/3", "5", "1.5", "1/0", "--1/2", "+1/2"])
def test_rational_parse_rejects_noncanonical(text):
    with pytest.raises(FieldError):
        Rationals().parse(text)


def test_prime_field_requires_prime():
    with pytest.raises(FieldError):
        PrimeField(6)
    with pytest.raises(FieldError):
        PrimeField(1)
    PrimeField(2)
    PrimeField(101)


def test_prime_field_parse():
    f = PrimeField(5)
    assert f.parse("3") == 3
    with pytest.raises(FieldError):
        f.parse("7")
    with pytest.raises(FieldError):
        f.parse("-1")
    with pytest.raises(FieldError):
        f.parse("03")


def test_prime_field_half():
    assert PrimeField(3).from_fraction(Fraction(1, 2)) == 2
    assert PrimeField(5).from_fraction(Fraction(1, 2)) == 3
    with pytest.raises(CharacteristicError):
        PrimeField(2).from_fraction(Fraction(1, 2))


@given(st.integers(1, 4), st.integers(-20, 20))
def test_gf5_inverse(den, num):
    f = PrimeField(5)
    x = f.from_fraction(Fraction(num, den))
    if x != 0:
        assert f.mul(x, f.inv(x)) == f.one()


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
)
def test_rational_field_laws(a, b, c):
    f = Rationals()
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero()
    if a != 0:
        assert f.mul(a, f.inv(a)) == f.one()
