from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from quadalg.polynomial import Polynomial, antidifference

coeff_lists = st.lists(st.fractions(max_denominator=20), max_size=5)


def test_trim_and_degree():
    assert Polynomial([1, 2, 0, 0]).degree == 1
    assert Polynomial().degree == -1
    assert Polynomial([0, 0]).is_zero()


def test_format():
    assert Polynomial([2, -3, -3]).format("Q0") == "-3*Q0^2 - 3*Q0 + 2"
    assert str(Polynomial([Fraction(1, 2), 0, 1])) == "x^2 + 1/2"


@given(coeff_lists, st.fractions(max_denominator=10))
def test_antidifference(cs, c0):
    f = Polynomial(cs)
    p = antidifference(f, c0)
    assert p.shift(1) - p == f
    assert p(0) == c0


@given(coeff_lists, coeff_lists, st.fractions(max_denominator=10))
def test_ring_evaluation(xs, ys, t):
    x, y = Polynomial(xs), Polynomial(ys)
    assert (x * y)(t) == x(t) * y(t)
    assert (x + y)(t) == x(t) + y(t)
