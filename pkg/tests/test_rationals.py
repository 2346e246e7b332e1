import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catmag import (
    RationalParseError,
    decimal_approximation,
    format_rational,
    make_rational,
    parse_rational,
)

rationals = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4)
nonzero_rationals = rationals.filter(lambda r: r != 0)


def test_make_reduces_to_canonical_form():
    assert make_rational(2, 4) == Fraction(1, 2)
    assert make_rational(3, -6) == Fraction(-1, 2)
    zero = make_rational(0, 7)
    assert zero.numerator == 0 and zero.denominator == 1


def test_make_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        make_rational(1, 0)


def test_field_op_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(1, 3) * Fraction(3, 1) == 1
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 2) / Fraction(0)


@given(rationals, rationals)
def test_results_are_canonical(a, b):
    for value in (a + b, a - b, a * b):
        assert value.denominator > 0
        assert math.gcd(abs(value.numerator), value.denominator) == 1


@given(rationals, rationals, rationals)
def test_field_axioms_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1


@pytest.mark.parametrize(
    "text,expected",
    [
        ("-3/6", Fraction(-1, 2)),
        ("7", Fraction(7)),
        ("007", Fraction(7)),
        ("  5/10\n", Fraction(1, 2)),
        ("0", Fraction(0)),
        ("-0", Fraction(0)),
    ],
)
def test_parse_accepts(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize(
    "text", ["1/0", "", "   ", "1.5", "+3", "3/-2", "1/02", "1 /2", "a", "2/", "/3", "−3/6"]
)
def test_parse_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_parse_error_reports_position():
    with pytest.raises(RationalParseError) as exc:
        parse_rational("12x/5")
    assert exc.value.position == 2
    with pytest.raises(RationalParseError) as exc:
        parse_rational("  1/0")
    assert exc.value.position == 4


def test_format_examples():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(7)) == "7"
    assert format_rational(Fraction(0)) == "0"


@given(rationals)
def test_parse_format_round_trip(r):
    assert parse_rational(format_rational(r)) == r


def test_decimal_approximation():
    assert decimal_approximation(Fraction(1, 3), 4) == "0.3333"
    assert decimal_approximation(Fraction(-1, 3), 2) == "-0.33"
    assert decimal_approximation(Fraction(5), 0) == "5"
    assert decimal_approximation(Fraction(1, 2), 3) == "0.500"
