from fractions import Fraction

import pytest

from coxtrop.laurent import LaurentPoly
from coxtrop.parse import LaurentSyntaxError, parse_laurent


@pytest.mark.parametrize("text, terms", [
    ("t^4", {4: 1}),
    ("-t^3", {3: -1}),
    ("2*t^-1 + 1/3", {-1: 2, 0: Fraction(1, 3)}),
    ("1", {0: 1}),
    ("t", {1: 1}),
    ("t^-4", {-4: 1}),
    ("2/3*t^5 + t", {5: Fraction(2, 3), 1: 1}),
    (" 3 t ^ 2 - 3t^2 ", {}),
    ("-5", {0: -5}),
    ("t - t", {}),
])
def test_valid(text, terms):
    assert parse_laurent(text) == LaurentPoly(terms)


@pytest.mark.parametrize("text", ["t^", "", "t +", "3**t", "tt", "1/0", "2/-3", "x", "t^1.5", "(t)"])
def test_invalid(text):
    with pytest.raises(LaurentSyntaxError) as info:
        parse_laurent(text)
    assert info.value.position >= 0


def test_error_position_points_at_problem():
    with pytest.raises(LaurentSyntaxError) as info:
        parse_laurent("t + 2*x")
    assert info.value.position == 6
