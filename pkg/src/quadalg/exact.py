"""Exact scalars: rationals and rational multiples of square roots.

Rationals are plain :class:`fractions.Fraction` values.  Matrix entries of
the representations are square roots of rationals, which we keep as
``coeff * sqrt(radicand)`` with a squarefree integer radicand.  That set is
closed under multiplication; addition is only defined inside one square
class, which is all the commutator and Casimir identities ever need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Union

Rational = Fraction

# Largest trial divisor tried when extracting square factors.
FACTOR_SEARCH_LIMIT = 10**6


class NotClosedError(ArithmeticError):
    """Raised when adding values from two different square classes."""


class FactorLimitError(ArithmeticError):
    """Raised when squarefree extraction needs a divisor beyond the cap."""


def as_rational(x: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints, ``"p/q"`` strings and fractions; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``.  Decimal points and exponents are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num.strip())
        q = int(den.strip()) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    return str(q)


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` squarefree."""
    if n < 0:
        raise ValueError("squarefree_split needs a nonnegative integer")
    if n == 0:
        return 0, 1
    r = isqrt(n)
    if r * r == n:
        return r, 1
    s, d = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        if p > FACTOR_SEARCH_LIMIT:
            raise FactorLimitError(
                f"squarefree extraction of {n} needs divisors above {FACTOR_SEARCH_LIMIT}")
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return s, d * rest


@dataclass(frozen=True, slots=True)
class SqrtRational:
    """The real number ``coeff * sqrt(radicand)``."""

    coeff: Fraction
    radicand: int = 1

    def __post_init__(self):
        c = as_rational(self.coeff)
        d = self.radicand
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if c == 0 or d == 0:
            c, d = Fraction(0), 1
        else:
            s, d = squarefree_split(d)
            c = c * s
        object.__setattr__(self, "coeff", c)
        object.__setattr__(self, "radicand", d)

    @classmethod
    def of(cls, x) -> "SqrtRational":
        if isinstance(x, SqrtRational):
            return x
        return cls(as_rational(x), 1)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def is_zero(self) -> bool:
        return self.coeff == 0

    def rational(self) -> Fraction:
        """Value as a Fraction; fails unless the radicand is 1."""
        if self.radicand != 1:
            raise ValueError(f"{self} is irrational")
        return self.coeff

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def to_float(self) -> float:
        return float(self.coeff) * self.radicand ** 0.5

    def __mul__(self, other):
        if not isinstance(other, SqrtRational):
            try:
                other = SqrtRational.of(other)
            except TypeError:
                return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = SqrtRational.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero SqrtRational")
        # 1/(c*sqrt(d)) = sqrt(d) / (c*d)
        inv = SqrtRational(1 / (other.coeff * other.radicand), other.radicand)
        return mul(self, inv)

    def __add__(self, other):
        if not isinstance(other, SqrtRational):
            try:
                other = SqrtRational.of(other)
            except TypeError:
                return NotImplemented
        return add_same_class(self, other)

    __radd__ = __add__

    def __neg__(self):
        return SqrtRational(-self.coeff, self.radicand)

    def __sub__(self, other):
        return self + (-SqrtRational.of(other))

    def __rsub__(self, other):
        return SqrtRational.of(other) - self

    def __bool__(self):
        return self.coeff != 0

    def __str__(self):
        if self.radicand == 1:
            return str(self.coeff)
        if self.coeff == 1:
            return f"sqrt({self.radicand})"
        return f"{self.coeff}*sqrt({self.radicand})"

    def to_json(self) -> dict:
        return {"coeff": format_rational(self.coeff), "radicand": self.radicand}

    @classmethod
    def from_json(cls, obj: dict) -> "SqrtRational":
        return cls(parse_rational(obj["coeff"]), int(obj["radicand"]))


ZERO = SqrtRational(Fraction(0))
ONE = SqrtRational(Fraction(1))


def sqrt_exact(q) -> SqrtRational:
    """Exact square root of a nonnegative rational.

    ``sqrt(p/r)`` is written as ``sqrt(p*r)/r`` so that the radicand is an
    integer, then square factors are pulled into the coefficient.
    """
    q = as_rational(q)
    if q < 0:
        raise ValueError(f"sqrt_exact of negative value {q}")
    return SqrtRational(Fraction(1, q.denominator), q.numerator * q.denominator)


def mul(x: SqrtRational, y: SqrtRational) -> SqrtRational:
    if x.coeff == 0 or y.coeff == 0:
        return ZERO
    # both radicands squarefree: d1*d2 = g^2 * (d1/g) * (d2/g), the latter coprime
    g = gcd(x.radicand, y.radicand)
    return SqrtRational(x.coeff * y.coeff * g, (x.radicand // g) * (y.radicand // g))


def add_same_class(x: SqrtRational, y: SqrtRational) -> SqrtRational:
    if x.coeff == 0:
        return y
    if y.coeff == 0:
        return x
    if x.radicand != y.radicand:
        raise NotClosedError(f"not closed under addition: {x} + {y}")
    return SqrtRational(x.coeff + y.coeff, x.radicand)
