from fractions import Fraction

import pytest

from eigencert.numerics import (
    EXACT,
    BackendMismatchError,
    ParseError,
    exact_value,
    float_backend,
    parse_decimal,
    to_float,
)


def test_parse_decimal_integers():
    assert parse_decimal("3") == 3
    assert parse_decimal("-17") == -17
    assert parse_decimal("+0") == 0


def test_parse_decimal_fractional():
    assert parse_decimal("0.625") == Fraction(5, 8)
    assert parse_decimal("-1.25") == Fraction(-5, 4)
    assert parse_decimal(".5") == Fraction(1, 2)
    assert parse_decimal("1e-7") == Fraction(1, 10**7)
    assert parse_decimal("2.5E2") == 250


def test_parse_decimal_is_exact_not_binary():
    # 0.1 has no finite binary expansion; the parse must not go through one
    assert parse_decimal("0.1") == Fraction(1, 10)


@pytest.mark.parametrize("bad", ["", "nan", "inf", "1/3", "1.2.3", "0x10", "1e", "--1"])
def test_parse_decimal_rejects(bad):
    with pytest.raises(ParseError):
        parse_decimal(bad)


def test_exact_backend_convert():
    assert EXACT.convert(3) == Fraction(3)
    assert EXACT.convert("0.5") == Fraction(1, 2)
    assert EXACT.convert(Fraction(2, 7)) == Fraction(2, 7)


def test_exact_backend_refuses_binary_floats():
    with pytest.raises(ParseError):
        EXACT.convert(0.1)


def test_float_backend_interned():
    assert float_backend(256) is float_backend(256)
    assert float_backend(256) == float_backend(256)
    assert float_backend(256) != float_backend(128)
    with pytest.raises(ValueError):
        float_backend(32)


def test_to_float_correct_rounding():
    fb = float_backend(64)
    x = to_float(Fraction(1, 3), 64)
    # round-to-nearest: |x - 1/3| <= 2^-66 (half ulp of a 64-bit mantissa)
    err = abs(exact_value(x) - Fraction(1, 3))
    assert err <= Fraction(1, 2**66)
    assert fb.owns(x)


def test_to_float_dyadic_exact():
    assert exact_value(to_float(Fraction(5, 8), 64)) == Fraction(5, 8)
    assert exact_value(to_float(Fraction(-3, 1), 256)) == -3


def test_float_convert_string_single_rounding():
    fb = float_backend(256)
    via_string = fb.convert("0.1")
    via_fraction = fb.from_fraction(Fraction(1, 10))
    assert via_string == via_fraction


def test_text_round_trip_float():
    fb = float_backend(256)
    x = fb.convert(Fraction(1, 3))
    again = fb.convert(fb.to_text(x))
    assert again == x


def test_text_round_trip_exact():
    from eigencert.report import text_scalar

    assert text_scalar(EXACT.to_text(Fraction(-71, 8))) == Fraction(-71, 8)
    assert text_scalar("0.625") == Fraction(5, 8)


def test_exact_value_rejects_junk():
    with pytest.raises(BackendMismatchError):
        exact_value("not a number")
