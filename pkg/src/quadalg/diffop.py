"""Single-variable differential realizations on weighted monomial bases.

An operator ``sum_q p_q(z) D^q`` acts on ``z^n`` by
``sum_q p_q(z) n!/(n-q)! z^(n-q)``.  A representation space is spanned by
``psi_n = sqrt(w_n) z^n``; weights are stored squared so matrix elements
``c_mn sqrt(w_n / w_m)`` stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .algebra import ClassId, ClassParams, require_valid
from .exact import ZERO, SqrtRational, sqrt_exact
from .parsing import parse_monomials
from .polynomial import Polynomial
from .reps import TripleRep, build_rep


class DiffOperator:
    """``terms[q]`` is the polynomial multiplying ``D^q``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for q, p in (terms or {}).items():
            p = p if isinstance(p, Polynomial) else Polynomial(p)
            if not p.is_zero():
                clean[int(q)] = p
        self.terms: dict[int, Polynomial] = dict(sorted(clean.items()))

    @classmethod
    def parse(cls, text: str) -> "DiffOperator":
        mono = parse_monomials(text, ("z", "D"), ordered=True)
        by_order: dict[int, dict[int, Fraction]] = {}
        for (a, q), c in mono.items():
            by_order.setdefault(q, {})[a] = c
        terms = {}
        for q, cs in by_order.items():
            top = max(cs)
            terms[q] = Polynomial([cs.get(i, 0) for i in range(top + 1)])
        return cls(terms)

    def __eq__(self, other):
        return isinstance(other, DiffOperator) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        out = dict(self.terms)
        for q, p in other.terms.items():
            out[q] = out[q] + p if q in out else p
        return DiffOperator(out)

    def __sub__(self, other: "DiffOperator") -> "DiffOperator":
        return self + DiffOperator({q: -p for q, p in other.terms.items()})

    def compose(self, other: "DiffOperator") -> "DiffOperator":
        """Product ``self . other``, via Leibniz on each term."""
        out: dict[int, Polynomial] = {}
        for q1, p1 in self.terms.items():
            for q2, p2 in other.terms.items():
                # D^q1 (p2 D^q2) = sum_r C(q1, r) p2^(r) D^(q1 - r + q2)
                deriv = p2
                binom = 1
                for r in range(q1 + 1):
                    if deriv.is_zero():
                        break
                    order = q1 - r + q2
                    term = p1 * deriv * binom
                    out[order] = out[order] + term if order in out else term
                    deriv = deriv.derivative()
                    binom = binom * (q1 - r) // (r + 1)
        return DiffOperator(out)

    def format(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for q, p in self.terms.items():
            dpart = "" if q == 0 else ("D" if q == 1 else f"D^{q}")
            for a in range(p.degree, -1, -1):
                c = p.coeff(a)
                if c == 0:
                    continue
                zpart = "" if a == 0 else ("z" if a == 1 else f"z^{a}")
                atoms = [x for x in (zpart, dpart) if x]
                mag = abs(c)
                if not atoms:
                    body = str(mag)
                elif mag == 1:
                    body = "*".join(atoms)
                else:
                    body = "*".join([str(mag)] + atoms)
                pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = format

    def __repr__(self):
        return f"DiffOperator({self.format()!r})"


def D(order: int = 1) -> DiffOperator:
    return DiffOperator({order: Polynomial([1])})


def _falling(n: int, q: int) -> int:
    out = 1
    for i in range(q):
        out *= n - i
    return out


def apply(op: DiffOperator, n: int) -> Polynomial:
    """The image of ``z^n``."""
    if n < 0:
        raise ValueError("monomial degree must be nonnegative")
    out = Polynomial()
    for q, p in op.terms.items():
        if q > n:
            continue
        out = out + p * Polynomial.monomial(n - q, _falling(n, q))
    return out


# ------------------------------------------------------------------- bases


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    return 1 if n < 2 else n * factorial(n - 1)


@dataclass(frozen=True)
class WeightedBasis:
    """Functions ``sqrt(weight_sq[n]) z^n``.  A truncated basis drops
    images above its top degree instead of failing."""

    params: ClassParams
    weight_sq: tuple[Fraction, ...]
    truncated: bool = False

    @property
    def size(self) -> int:
        return len(self.weight_sq)


def _int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"factorial argument {x} is not an integer")
    return int(x)


def basis_for(params: ClassParams, nmax: Optional[int] = None) -> WeightedBasis:
    v = require_valid(params)
    if v.beyond_fock:
        raise ValueError(f"{params}: non-half-integer k needs gamma-function weights; "
                         "use the matrix representation instead")
    cls, s, l = params.cls, params.spin, params.l

    def inv(*args):
        out = 1
        for a in args:
            out *= factorial(_int(a))
        return Fraction(1, out)

    infinite = cls in (ClassId.SU11, ClassId.QPlus11)
    if infinite and nmax is None:
        raise ValueError(f"{cls.value} is infinite dimensional: nmax is required")
    if cls is ClassId.SU2:
        w = [inv(n, 2 * s - n) for n in range(_int(2 * s) + 1)]
    elif cls is ClassId.SU11:
        w = [inv(n + 2 * s - 1, n) for n in range(nmax + 1)]
    elif cls is ClassId.QMinus2:
        top = 2 * s if v.case == "I" else 2 * l + s
        w = [inv(n, 2 * s - n, 2 * l + s - n) for n in range(_int(top) + 1)]
    elif cls is ClassId.QPlus2:
        w = [inv(n, 2 * s - n, n - 2 * l - s) for n in range(_int(2 * s) + 1)]
    elif cls is ClassId.QMinus11:
        w = [inv(n + 2 * s - 1, n, 2 * l - s - n) for n in range(_int(2 * l - s) + 1)]
    else:
        w = [inv(n + 2 * s - 1, n, n + s - 2 * l) for n in range(nmax + 1)]
    return WeightedBasis(params, tuple(w), truncated=infinite)


# ------------------------------------------------------------- realizations


@dataclass(frozen=True)
class DiffRealization:
    q0: DiffOperator
    qplus: DiffOperator
    qminus: DiffOperator

    def items(self):
        return (("q0", self.q0), ("qplus", self.qplus), ("qminus", self.qminus))


def _op(**orders) -> DiffOperator:
    # _op(d0=[...], d1=[...]) with ascending z coefficients per D order
    return DiffOperator({int(k[1:]): Polynomial(v) for k, v in orders.items()})


def realization_for(params: ClassParams) -> DiffRealization:
    """Differential operators reproducing the (spin, l) irrep on its basis.

    For Q-(2) the raising operator is
    ``z^3 D^2 - (2l+3j-1) z^2 D + 2j(2l+j) z`` and for Q+(2) the lowering
    operator is ``z D^2 - (2l+j-1) D``; these are the forms whose
    matrices match the ladder amplitudes.
    """
    require_valid(params)
    cls, s, l = params.cls, params.spin, params.l
    if cls is ClassId.SU2:
        return DiffRealization(_op(d0=[-s], d1=[0, 1]), _op(d0=[0, 2 * s], d1=[0, 0, -1]),
                               _op(d1=[1]))
    if cls is ClassId.SU11:
        return DiffRealization(_op(d0=[s], d1=[0, 1]), _op(d0=[0, 1]),
                               _op(d1=[2 * s], d2=[0, 1]))
    if cls is ClassId.QMinus2:
        return DiffRealization(
            _op(d0=[-s - l], d1=[0, 1]),
            _op(d0=[0, 2 * s * (2 * l + s)], d1=[0, 0, -(2 * l + 3 * s - 1)], d2=[0, 0, 0, 1]),
            _op(d1=[1]))
    if cls is ClassId.QPlus2:
        return DiffRealization(
            _op(d0=[-s - l], d1=[0, 1]),
            _op(d0=[0, 2 * s], d1=[0, 0, -1]),
            _op(d1=[-(2 * l + s - 1)], d2=[0, 1]))
    if cls is ClassId.QMinus11:
        return DiffRealization(
            _op(d0=[s - l], d1=[0, 1]),
            _op(d0=[0, 2 * l - s], d1=[0, 0, -1]),
            _op(d1=[2 * s], d2=[0, 1]))
    return DiffRealization(
        _op(d0=[s - l], d1=[0, 1]),
        _op(d0=[0, 1]),
        _op(d1=[2 * s * s - 4 * s * l + 2 * s], d2=[0, 3 * s - 2 * l + 2], d3=[0, 0, 1]))


class BasisEscapeError(ValueError):
    """An operator image left the span of a finite basis."""


def matrix_in_basis(op: DiffOperator, basis: WeightedBasis) -> list[list[SqrtRational]]:
    """``M[m][n]`` = coefficient of z^m in op(z^n) times sqrt(w_n / w_m)."""
    size = basis.size
    w = basis.weight_sq
    out = [[ZERO] * size for _ in range(size)]
    for n in range(size):
        img = apply(op, n)
        for m, c in enumerate(img.coeffs):
            if c == 0:
                continue
            if m >= size:
                if basis.truncated:
                    continue
                raise BasisEscapeError(f"image of z^{n} has degree {m} outside the basis "
                                       f"(top degree {size - 1})")
            out[m][n] = SqrtRational(c) * sqrt_exact(w[n] / w[m])
    return out


@dataclass
class EquivalenceReport:
    params: ClassParams
    dim: int
    mismatches: list[tuple[str, int, int, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        out = {"params": self.params.to_json(), "dim": self.dim, "ok": self.ok}
        if self.mismatches:
            g, r, c, got, want = self.mismatches[0]
            out["first_mismatch"] = {"generator": g, "row": r, "col": c,
                                     "diffop": got, "matrix": want}
        return out


def compare_to_rep(matrices: dict[str, list[list[SqrtRational]]], rep: TripleRep
                   ) -> list[tuple[str, int, int, str, str]]:
    bad = []
    for name, got in matrices.items():
        want = rep.dense(name)
        for r in range(rep.dim):
            for c in range(rep.dim):
                if got[r][c] != want[r][c]:
                    bad.append((name, r, c, str(got[r][c]), str(want[r][c])))
    return bad


def verify_equivalence(params: ClassParams, nmax: Optional[int] = None) -> EquivalenceReport:
    """Matrices of the differential realization against the ladder irrep."""
    basis = basis_for(params, nmax)
    rep = build_rep(params, nmax)
    real = realization_for(params)
    mats = {name: matrix_in_basis(op, basis) for name, op in real.items()}
    return EquivalenceReport(params, rep.dim, compare_to_rep(mats, rep))
