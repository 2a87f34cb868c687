import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from hypfree.scalars import FieldError, Scalar, format_scalar, parse_scalar

rationals = st.builds(mpq, st.integers(min_value=-40, max_value=40),
                      st.integers(min_value=1, max_value=12))


def q5(a, b):
    return Scalar(mpq(a), mpq(b), 5)


def test_basic_arithmetic_exact():
    x = q5("3/4", 2)
    y = q5("-1/2", "1/3")
    assert (x + y) - y == x
    assert x * y == y * x
    assert (x * y) * x.inverse() == y * (x * x.inverse())
    assert x * x.inverse() == Scalar.one()


def test_rational_collapse():
    # zero root part drops the field marker, so equality is field-agnostic
    assert Scalar(mpq(3), mpq(0), 5) == Scalar.rational(3)
    assert Scalar(mpq(3), mpq(0), 5).field_tag == "rational"
    assert q5(0, 1).field_tag == "quadratic(5)"


def test_field_mixing_rejected():
    with pytest.raises(FieldError):
        _ = q5(1, 1) * Scalar(mpq(0), mpq(1), 2)
    with pytest.raises(FieldError):
        Scalar(mpq(1), mpq(1), 0)
    with pytest.raises(FieldError):
        Scalar.root(12)  # not square-free


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        Scalar.zero().inverse()


@given(rationals, rationals)
def test_conjugate_norm_identity(a, b):
    # (a + b sqrt5)(a - b sqrt5) == a^2 - 5 b^2, exactly
    x = Scalar(a, b, 5) if b else Scalar(a)
    prod = x * x.conjugate()
    assert prod == Scalar(a * a - 5 * b * b)


@given(rationals, rationals, rationals, rationals)
def test_mul_distributes(a, b, c, d):
    x = Scalar(a, b, 5) if b else Scalar(a)
    y = Scalar(c, d, 5) if d else Scalar(c)
    z = q5(1, -2)
    assert (x + y) * z == x * z + y * z


@given(rationals, rationals)
def test_parse_format_round_trip(a, b):
    x = Scalar(a, b, 5) if b else Scalar(a)
    assert parse_scalar(format_scalar(x), 5) == x


def test_parse_examples():
    assert parse_scalar("3/4") == Scalar.rational("3/4")
    assert parse_scalar("-2") == Scalar.rational(-2)
    assert parse_scalar("1/2+3/4*r", 5) == q5("1/2", "3/4")
    assert parse_scalar("1/2-3/4*r", 5) == q5("1/2", "-3/4")
    assert parse_scalar("-1/2*r", 5) == q5(0, "-1/2")
    with pytest.raises(ValueError):
        parse_scalar("1//2")
    with pytest.raises(FieldError):
        parse_scalar("1+2*r")  # root term without a declared field


def test_sort_key_total_and_stable():
    xs = [q5(1, 2), q5(1, -2), Scalar.rational(0), q5("1/2", 0)]
    order1 = sorted(xs, key=Scalar.sort_key)
    order2 = sorted(reversed(xs), key=Scalar.sort_key)
    assert order1 == order2
