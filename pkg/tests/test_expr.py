"""Expression grammar: parsing, canonical serialization, diagnostics."""

import random

import pytest

from gcrs import (
    BadCoefficientError,
    Field,
    ParseError,
    Ring,
    UnknownGeneratorError,
    parse_field_literal,
)
from oracles import random_poly

PAPER_NAMES = ("z", "y", "x", "w", "v", "u", "t", "s", "r", "q")
PAPER_DEGREES = (1, 1, 1, 2, 2, 3, 5, 5, 5, 8)


@pytest.fixture(scope="module")
def R():
    return Ring(Field(2), PAPER_NAMES, PAPER_DEGREES)


@pytest.fixture(scope="module")
def R4():
    return Ring(Field(2, 2), PAPER_NAMES, PAPER_DEGREES)


def test_relation_polynomial(R):
    f = R.parse("z*v + x*w")
    assert f.term_count() == 2
    assert f.is_homogeneous() and f.degree() == 3


def test_zero_literal(R):
    assert R.parse("0").is_zero()
    assert R.parse("2").is_zero()  # 2 = 0 over F_2
    assert R.parse("0*z + 0").is_zero()


def test_nine_term_degree_four(R):
    f = R.parse("z^4 + z^2*w + z*x^3 + z*x*v + x^4 + x^2*v + w^2 + w*v + v^2")
    assert f.term_count() == 9
    assert f.is_homogeneous()
    assert f.degree() == 4


def test_parse_serialize_fixed_point(R, R4):
    rng = random.Random(41)
    for ring in (R, R4):
        for _ in range(150):
            f = random_poly(ring, rng, 9, 7)
            once = ring.parse(str(f))
            assert once == f
            assert ring.parse(str(once)) == once


def test_subtraction_folds(R):
    assert R.parse("z - y") == R.parse("z + y")  # char 2
    ring3 = Ring(Field(3), ("a", "b"), (1, 1))
    assert ring3.parse("a - b") == ring3.parse("a + 2*b")
    assert ring3.parse("-a") == ring3.parse("2*a")


def test_exponents_and_repeated_factors(R):
    assert R.parse("z*z*z") == R.parse("z^3")
    assert R.parse("z^2*z") == R.parse("z^3")
    assert R.parse("z^0") == R.one()


def test_coefficients_in_odd_characteristic():
    ring = Ring(Field(5), ("a", "b"), (1, 1))
    f = ring.parse("3*a*b + 7*b^2")
    assert str(f) == "3*a*b + 2*b^2"


def test_extension_coefficients(R4):
    f = R4.parse("(@+1)*w*v^2")
    assert str(f) == "(@+1)*w*v^2"
    assert R4.parse("(@)*w + (@)*w") == R4.zero()
    assert R4.parse("(@^2)*w") == R4.parse("(@+1)*w")  # w^2 = w + 1 under the modulus
    # bare @ factors fold into the coefficient
    assert R4.parse("@*w") == R4.parse("(@)*w")
    assert R4.parse("@^2*w") == R4.parse("(@+1)*w")
    assert R4.parse("@*@*w") == R4.parse("(@+1)*w")


def test_unknown_generator_position(R):
    with pytest.raises(UnknownGeneratorError) as err:
        R.parse("z*v + zy")
    assert err.value.line == 1
    assert err.value.column == 7
    assert err.value.name == "zy"


def test_syntax_error_positions(R):
    cases = {
        "z*": 3,
        "z^": 3,
        "+z": 1,
        "z++y": 3,
        "(1+2": 5,
        "z*3": 3,
    }
    for text, column in cases.items():
        with pytest.raises(ParseError) as err:
            R.parse(text)
        assert err.value.column == column, text


def test_bad_coefficient_in_prime_field(R):
    with pytest.raises(BadCoefficientError):
        R.parse("(@)*z")
    with pytest.raises(BadCoefficientError):
        R.parse("@*z")


def test_digit_leading_identifier(R):
    with pytest.raises(ParseError):
        R.parse("2x")


def test_field_literal_parsing():
    f4 = Field(2, 2)
    assert parse_field_literal("@+1", f4).coeffs == (1, 1)
    assert parse_field_literal("@^2", f4) == f4.element([1, 1])
    f9 = Field(3, 2)
    assert parse_field_literal("2*@+1", f9).coeffs == (1, 2)
    assert parse_field_literal("0", f9) == f9.zero()


def test_multiline_positions(R):
    with pytest.raises(UnknownGeneratorError) as err:
        R.parse("z*v +\n  bogus")
    assert err.value.line == 2
    assert err.value.column == 3
