import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadalg.algebra import QuadraticAlgebraSpec
from quadalg.parsing import ParseError, format_spec, parse_spec


@pytest.mark.parametrize("text,abc", [
    ("-3*Q0^2 - 3*Q0 + 2", (-3, -3, 2)),
    ("2*Q0", (0, 2, 0)),
    ("Q0^2 + Q0^2", (2, 0, 0)),
    ("1/2*Q0 - 3/4", (0, "1/2", "-3/4")),
])
def test_parse_spec(text, abc):
    assert parse_spec(text) == QuadraticAlgebraSpec(*abc)


@pytest.mark.parametrize("text", ["Q0^3", "Q1", "3 3", "2*", "", "0.5*Q0", "1/0"])
def test_parse_spec_errors(text):
    with pytest.raises(ParseError):
        parse_spec(text)


def test_error_position():
    with pytest.raises(ParseError) as exc:
        parse_spec("Q0 + $")
    assert exc.value.pos == 5


@given(*(st.fractions(max_denominator=30) for _ in range(3)))
def test_round_trip(a, b, c):
    spec = QuadraticAlgebraSpec(a, b, c)
    assert parse_spec(format_spec(spec)) == spec
