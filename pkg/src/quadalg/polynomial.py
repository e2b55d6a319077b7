"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

from .exact import as_rational


class Polynomial:
    """Coefficients in ascending degree, trailing zeros trimmed.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, h=1) -> "Polynomial":
        """Return x -> p(x + h)."""
        h = as_rational(h)
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            for r in range(i + 1):
                out[r] += c * comb(i, r) * h ** (i - r)
        return Polynomial(out)

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                atom = var if i == 1 else f"{var}^{i}"
                body = atom if mag == 1 else f"{mag}*{atom}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = format


def _lift(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x)


def antidifference(f: Polynomial, constant=None) -> Polynomial:
    """Solve ``p(x+1) - p(x) == f(x)`` for p with ``p(0) = constant``.

    Writing ``p = sum c_i x^i``, the coefficient of ``x^r`` in
    ``p(x+1) - p(x)`` is ``sum_{i>r} c_i C(i, r)``, a triangular system
    solved from the top degree down.
    """
    d = f.degree
    if d < 0:
        return Polynomial([constant or 0])
    c = [Fraction(0)] * (d + 2)
    for r in range(d, -1, -1):
        acc = f.coeff(r)
        for i in range(r + 2, d + 2):
            acc -= c[i] * comb(i, r)
        c[r + 1] = acc / (r + 1)
    c[0] = as_rational(constant) if constant is not None else Fraction(0)
    return Polynomial(c)
