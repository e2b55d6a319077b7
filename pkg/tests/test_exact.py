from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadalg.exact import (NotClosedError, SqrtRational, as_rational, parse_rational,
                           sqrt_exact, squarefree_split)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**4)
nonneg = rationals.map(abs)


@pytest.mark.parametrize("text,want", [("3", Fraction(3)), ("-7/4", Fraction(-7, 4)),
                                       (" 6/8 ", Fraction(3, 4))])
def test_parse_rational(text, want):
    assert parse_rational(text) == want


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/2/3", "", "x"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_as_rational_refuses_floats_and_bools():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_sqrt_normal_form():
    assert sqrt_exact(12) == SqrtRational(2, 3)
    assert sqrt_exact(Fraction(1, 2)) == SqrtRational(Fraction(1, 2), 2)
    assert str(SqrtRational(2, 5)) == "2*sqrt(5)"
    assert SqrtRational(0, 7) == SqrtRational(0)
    with pytest.raises(ValueError):
        sqrt_exact(-1)


def test_adding_different_square_classes_is_refused():
    with pytest.raises(NotClosedError):
        sqrt_exact(2) + sqrt_exact(3)


@given(st.integers(min_value=1, max_value=10**6))
def test_squarefree_split(n):
    s, d = squarefree_split(n)
    assert s * s * d == n
    assert all(d % (p * p) for p in range(2, int(d ** 0.5) + 1))


@given(nonneg)
def test_sqrt_squares_back(q):
    assert sqrt_exact(q).square() == q


@given(nonneg, nonneg)
def test_sqrt_is_multiplicative(x, y):
    assert sqrt_exact(x) * sqrt_exact(y) == sqrt_exact(x * y)


@given(rationals, st.integers(min_value=1, max_value=200))
def test_json_round_trip(c, d):
    x = SqrtRational(c, d)
    assert SqrtRational.from_json(x.to_json()) == x
