from fractions import Fraction

import pytest

from genconorm.numeric import (
    RangeViolation,
    add_clamped,
    fmt,
    parse_fraction,
    parse_rational,
    q01,
    rational_arith,
    sub_floored,
)


def test_mul_exact():
    assert rational_arith("mul", Fraction(2, 5), Fraction(2, 5)) == Fraction(4, 25)


def test_add_clamped_caps_at_one():
    assert add_clamped(Fraction(9, 10), Fraction(9, 10)) == 1
    assert sub_floored(Fraction(1, 10), Fraction(1, 2)) == 0


def test_cmp_by_cross_multiplication():
    assert rational_arith("cmp", Fraction(12, 25), Fraction(1, 2)) == -1
    assert rational_arith("cmp", "1/2", "2/4") == 0


@pytest.mark.parametrize("text,value", [("2/5", Fraction(2, 5)), ("2/4", Fraction(1, 2)), ("1", 1), ("0", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["7/5", "-1/2"])
def test_parse_rational_rejects_outside_unit(text):
    with pytest.raises((RangeViolation, ValueError)):
        parse_rational(text)


@pytest.mark.parametrize("text", ["", "1/0", "0.5", "a/b", "1//2", " 1/2"])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_signed_parse_for_intercepts():
    assert parse_fraction("-3/4", signed=True) == Fraction(-3, 4)
    with pytest.raises(ValueError):
        parse_fraction("-3/4")


def test_q01_and_fmt():
    assert q01(Fraction(1, 3)) == Fraction(1, 3)
    with pytest.raises(RangeViolation):
        q01(Fraction(4, 3))
    assert fmt(Fraction(6, 8)) == "3/4"
    assert fmt(Fraction(1)) == "1"
