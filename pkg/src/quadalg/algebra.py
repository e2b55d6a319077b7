"""Abstract quadratic algebras [Q0, Q±] = ±Q±, [Q+, Q-] = a Q0^2 + b Q0 + c.

Covers the structure function and its Casimir correction, the four
bosonic classes Q-(2), Q+(2), Q-(1,1), Q+(1,1) (plus su(2) and su(1,1)
as the linear special cases), their parameter lattices, and the reverse
problem of naming the class behind a given (a, b, c).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import as_rational, format_rational, parse_rational, sqrt_exact
from .polynomial import Polynomial, antidifference


class ClassId(enum.Enum):
    SU2 = "su2"
    SU11 = "su11"
    QMinus2 = "Q-2"
    QPlus2 = "Q+2"
    QMinus11 = "Q-11"
    QPlus11 = "Q+11"

    @classmethod
    def parse(cls, tag: str) -> "ClassId":
        for c in cls:
            if c.value.lower() == tag.strip().lower():
                return c
        raise ValueError(f"unknown class tag {tag!r}; expected one of "
                         + ", ".join(c.value for c in cls))

    @property
    def is_su2_based(self) -> bool:
        return self in (ClassId.SU2, ClassId.QMinus2, ClassId.QPlus2)

    @property
    def spin_name(self) -> str:
        return "j" if self.is_su2_based else "k"


QUADRATIC_CLASSES = (ClassId.QMinus2, ClassId.QPlus2, ClassId.QMinus11, ClassId.QPlus11)


@dataclass(frozen=True)
class QuadraticAlgebraSpec:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def to_json(self) -> dict:
        return {k: format_rational(getattr(self, k)) for k in ("a", "b", "c")}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadraticAlgebraSpec":
        return cls(*(parse_rational(obj[k]) for k in ("a", "b", "c")))


@dataclass(frozen=True)
class ClassParams:
    """One irreducible representation: class tag, j or k, and the value l of L.

    ``extended`` admits non-half-integer k for the (1,1) classes; such
    representations exist as matrices but have no three-boson Fock form.
    """

    cls: ClassId
    spin: Fraction
    l: Fraction = Fraction(0)
    extended: bool = False

    def __post_init__(self):
        object.__setattr__(self, "spin", as_rational(self.spin))
        object.__setattr__(self, "l", as_rational(self.l))

    def to_json(self) -> dict:
        out = {"class": self.cls.value, "spin": format_rational(self.spin),
               "l": format_rational(self.l)}
        if self.extended:
            out["extended"] = True
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "ClassParams":
        return cls(ClassId.parse(obj["class"]), parse_rational(obj["spin"]),
                   parse_rational(obj.get("l", "0")), bool(obj.get("extended", False)))

    def __str__(self):
        s = f"{self.cls.value}({self.cls.spin_name}={self.spin}"
        if self.cls not in (ClassId.SU2, ClassId.SU11):
            s += f", l={self.l}"
        return s + (", extended)" if self.extended else ")")


@dataclass(frozen=True)
class Validity:
    valid: bool
    reason: str = ""
    case: Optional[str] = None
    beyond_fock: bool = False

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        out = {"valid": self.valid}
        if self.reason:
            out["reason"] = self.reason
        if self.case:
            out["case"] = self.case
        if self.beyond_fock:
            out["flag"] = "beyond the three-boson Fock-realizable set"
        return out


class InvalidParams(ValueError):
    """Parameters outside the class's representation lattice."""


def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _is_half_int(x: Fraction) -> bool:
    return (2 * x).denominator == 1


# ---------------------------------------------------------------- structure


def structure_function(spec: QuadraticAlgebraSpec) -> Polynomial:
    return Polynomial([spec.c, spec.b, spec.a])


def casimir_correction(f: Polynomial) -> Polynomial:
    """The polynomial p making ``Q+ Q- + p(Q0)`` central.

    Centrality needs ``p(x+1) - p(x) = f(x)``; the free constant is fixed by
    ``p(0) = -f(0)``.  For quadratic f this gives
    ``(a/3) x^3 - (a-b)/2 x^2 + (a-3b+6c)/6 x - c``.
    """
    return antidifference(f, constant=-f.coeff(0))


SU2_SPEC = QuadraticAlgebraSpec(0, 2, 0)
SU11_SPEC = QuadraticAlgebraSpec(0, -2, 0)


def class_structure_constants(params: ClassParams) -> QuadraticAlgebraSpec:
    """(a, b, c) of the class with L = l and J = j(j+1) or K = k(1-k)."""
    require_valid(params)
    s, l = params.spin, params.l
    cls = params.cls
    if cls is ClassId.SU2:
        return SU2_SPEC
    if cls is ClassId.SU11:
        return SU11_SPEC
    if cls is ClassId.QMinus2:
        return QuadraticAlgebraSpec(-3, -(2 * l - 1), s * (s + 1) + l * (l + 1))
    if cls is ClassId.QPlus2:
        return QuadraticAlgebraSpec(3, 2 * l + 1, -s * (s + 1) - l * (l - 1))
    if cls is ClassId.QMinus11:
        return QuadraticAlgebraSpec(3, 2 * l - 1, s * (1 - s) - l * (l + 1))
    return QuadraticAlgebraSpec(-3, -(2 * l + 1), l * (l - 1) - s * (1 - s))


# ----------------------------------------------------------------- validity


def validate_params(params: ClassParams) -> Validity:
    cls, s, l = params.cls, params.spin, params.l

    if cls.is_su2_based:
        if s < 0 or not _is_half_int(s):
            return Validity(False, f"j={s} must be one of 0, 1/2, 1, ...")
        if cls is ClassId.SU2:
            return Validity(True)
        if cls is ClassId.QMinus2:
            if _is_nonneg_int(2 * l - s):
                return Validity(True, case="I")
            if _is_nonneg_int(2 * l + s):
                return Validity(True, case="II")
            return Validity(False, f"neither 2l-j={2 * l - s} nor 2l+j={2 * l + s} "
                                   "is a nonnegative integer")
        if _is_nonneg_int(-(2 * l + s)):
            return Validity(True)
        return Validity(False, f"2l+j={2 * l + s} is not zero or a negative integer")

    # su(1,1)-based classes
    if s <= 0:
        return Validity(False, f"k={s} must be positive")
    beyond = not _is_half_int(s)
    if beyond and not params.extended:
        return Validity(False, f"k={s} must be one of 1/2, 1, 3/2, ... (strict mode)")
    if cls is ClassId.SU11:
        return Validity(True, beyond_fock=beyond)
    if cls is ClassId.QMinus11:
        if _is_nonneg_int(2 * l - s):
            return Validity(True, beyond_fock=beyond)
        return Validity(False, f"2l-k={2 * l - s} is not a nonnegative integer")
    if _is_nonneg_int(s - 2 * l):
        return Validity(True, beyond_fock=beyond)
    return Validity(False, f"k-2l={s - 2 * l} is not a nonnegative integer")


def require_valid(params: ClassParams) -> Validity:
    v = validate_params(params)
    if not v:
        raise InvalidParams(f"{params}: {v.reason}")
    return v


def dimension_of(params: ClassParams):
    """Dimension of the irrep; ``math.inf`` for su(1,1) and Q+(1,1)."""
    v = require_valid(params)
    s, l = params.spin, params.l
    cls = params.cls
    if cls in (ClassId.SU2, ClassId.QPlus2):
        return int(2 * s + 1)
    if cls is ClassId.QMinus2:
        return int(2 * s + 1) if v.case == "I" else int(s + 2 * l + 1)
    if cls is ClassId.QMinus11:
        return int(2 * l - s + 1)
    return math.inf


def lowest_q0(params: ClassParams) -> Fraction:
    """Q0 eigenvalue of the lowest basis state."""
    s, l = params.spin, params.l
    if params.cls is ClassId.SU2:
        return -s
    if params.cls is ClassId.SU11:
        return s
    if params.cls.is_su2_based:
        return -s - l
    return s - l


def casimir_value(params: ClassParams) -> Fraction:
    """Closed-form Casimir value quoted for each class.

    See :func:`casimir_lowest_weight` for the value the operator
    ``Q+ Q- + p(Q0)`` actually takes; the two agree only for Q+(2) and
    the two Lie algebras.
    """
    require_valid(params)
    s, l = params.spin, params.l
    cls = params.cls
    if cls is ClassId.SU2:
        return s * (s + 1)
    if cls is ClassId.SU11:
        return s * (1 - s)
    if cls is ClassId.QMinus2:
        return (l + 1) * (s * (s + 1) - l * (l - 1))
    if cls is ClassId.QPlus2:
        return (1 - l) * (s * (s + 1) - l * (l + 1))
    if cls is ClassId.QMinus11:
        return (l + 1) * (s * (1 - s) + l * (l - 1))
    return l * (l - s * s)


def casimir_lowest_weight(params: ClassParams) -> Fraction:
    """Casimir value from the lowest state, where Q- vanishes: p(Q0_min)."""
    p = casimir_correction(structure_function(class_structure_constants(params)))
    return p(lowest_q0(params))


# ----------------------------------------------------------- identification


@dataclass(frozen=True)
class Interpretation:
    """One reading of (a, b, c) as a class with solved parameters.

    ``params`` is None when the quadratic for j or k has no usable root;
    ``note`` then says why.
    """

    cls: ClassId
    l: Optional[Fraction]
    params: Optional[ClassParams]
    validity: Optional[Validity]
    note: str = ""

    @property
    def valid(self) -> bool:
        return bool(self.validity)

    def to_json(self) -> dict:
        out = {"class": self.cls.value}
        if self.l is not None:
            out["l"] = format_rational(self.l)
        if self.params is not None:
            out["spin"] = format_rational(self.params.spin)
        if self.validity is not None:
            out["validity"] = self.validity.to_json()
        else:
            out["validity"] = {"valid": False, "reason": self.note}
        if self.note:
            out["note"] = self.note
        return out


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    r = sqrt_exact(q)
    return r.coeff if r.radicand == 1 else None


def _solve_j(v: Fraction) -> tuple[list[Fraction], str]:
    # j(j+1) = v  ->  j = (-1 + sqrt(1+4v)) / 2, nonnegative root only
    disc = 1 + 4 * v
    if disc < 0:
        return [], f"j(j+1)={v} has no real j"
    root = _rational_sqrt(disc)
    if root is None:
        return [], f"j(j+1)={v} has only irrational roots"
    j = (-1 + root) / 2
    if j < 0:
        return [], f"j(j+1)={v} has no nonnegative root"
    return [j], ""


def _solve_k(v: Fraction) -> tuple[list[Fraction], str]:
    # k(1-k) = v  ->  k = (1 ± sqrt(1-4v)) / 2, positive roots only
    disc = 1 - 4 * v
    if disc < 0:
        return [], f"k(1-k)={v} has no real k"
    root = _rational_sqrt(disc)
    if root is None:
        return [], f"k(1-k)={v} has only irrational roots"
    ks = sorted({(1 + root) / 2, (1 - root) / 2}, reverse=True)
    ks = [k for k in ks if k > 0]
    if not ks:
        return [], f"k(1-k)={v} has no positive root"
    return ks, ""


def identify_class(spec: QuadraticAlgebraSpec, extended: bool = False) -> list[Interpretation]:
    """All readings of (a, b, c) as one of the classes, valid or not."""
    a, b, c = spec.a, spec.b, spec.c
    out: list[Interpretation] = []
    if a == 0:
        if c == 0 and b == 2:
            out.append(Interpretation(ClassId.SU2, None, None, Validity(True), "su(2)"))
        elif c == 0 and b == -2:
            out.append(Interpretation(ClassId.SU11, None, None, Validity(True), "su(1,1)"))
        else:
            kind = ClassId.SU2 if b > 0 else ClassId.SU11
            note = ("linear: su(2)/su(1,1) after shifting Q0 and rescaling Q±"
                    if b != 0 else "degenerate: [Q+,Q-] is a constant")
            out.append(Interpretation(kind, None, None, None, note))
        return out
    if a == -3:
        candidates = [
            (ClassId.QMinus2, (1 - b) / 2, lambda l: c - l * (l + 1), _solve_j),
            (ClassId.QPlus11, -(b + 1) / 2, lambda l: l * (l - 1) - c, _solve_k),
        ]
    elif a == 3:
        candidates = [
            (ClassId.QPlus2, (b - 1) / 2, lambda l: -c - l * (l - 1), _solve_j),
            (ClassId.QMinus11, (b + 1) / 2, lambda l: c + l * (l + 1), _solve_k),
        ]
    else:
        return out
    for cls, l, central, solve in candidates:
        roots, why = solve(central(l))
        if not roots:
            out.append(Interpretation(cls, l, None, None, why))
            continue
        for s in roots:
            p = ClassParams(cls, s, l, extended=extended)
            out.append(Interpretation(cls, l, p, validate_params(p)))
    return out


# --------------------------------------------------------------- enumeration


def lattice_coordinate(params: ClassParams) -> Fraction:
    """The integer that indexes l for fixed spin: 2l+j, -(2l+j), 2l-k or k-2l."""
    s, l = params.spin, params.l
    return {
        ClassId.QMinus2: 2 * l + s,
        ClassId.QPlus2: -(2 * l + s),
        ClassId.QMinus11: 2 * l - s,
        ClassId.QPlus11: s - 2 * l,
        ClassId.SU2: Fraction(0),
        ClassId.SU11: Fraction(0),
    }[params.cls]


def enumerate_params(cls: ClassId, spin_max, lattice_max: int, *,
                     l_min=None, l_max=None) -> list[ClassParams]:
    """Every strict-mode valid parameter pair with spin <= spin_max and
    lattice coordinate in [0, lattice_max], ordered by spin then coordinate.

    Optional ``l_min``/``l_max`` further restrict the box.
    """
    spin_max = as_rational(spin_max)
    out = []
    twice = 0 if cls.is_su2_based else 1
    while Fraction(twice, 2) <= spin_max:
        s = Fraction(twice, 2)
        twice += 1
        if cls in (ClassId.SU2, ClassId.SU11):
            out.append(ClassParams(cls, s))
            continue
        for t in range(lattice_max + 1):
            l = {
                ClassId.QMinus2: (t - s) / 2,
                ClassId.QPlus2: (-t - s) / 2,
                ClassId.QMinus11: (t + s) / 2,
                ClassId.QPlus11: (s - t) / 2,
            }[cls]
            if l_min is not None and l < as_rational(l_min):
                continue
            if l_max is not None and l > as_rational(l_max):
                continue
            p = ClassParams(cls, s, l)
            if validate_params(p):
                out.append(p)
    return out
