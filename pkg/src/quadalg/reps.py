"""Exact matrix irreps in ladder (tridiagonal) form, and their checks.

Every irrep here has Q0 diagonal, Q+ on the subdiagonal and Q- on the
superdiagonal, so a representation is three vectors and each commutator
identity reduces to one scalar identity per basis state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .algebra import (
    ClassId,
    ClassParams,
    InvalidParams,
    casimir_correction,
    class_structure_constants,
    require_valid,
    structure_function,
)
from .exact import ZERO, NotClosedError, SqrtRational, as_rational, format_rational, sqrt_exact
from .polynomial import Polynomial


@dataclass(frozen=True)
class TripleRep:
    """Q0 = diag(q0); ``qplus[i] = <i+1|Q+|i>``; ``qminus[i] = <i|Q-|i+1>``.

    ``truncated`` marks the first ``dim`` states of an infinite irrep; the
    last state then lacks its Q+ image.
    """

    params: ClassParams
    q0: tuple[Fraction, ...]
    qplus: tuple[SqrtRational, ...]
    qminus: tuple[SqrtRational, ...]
    truncated: bool = False

    @property
    def dim(self) -> int:
        return len(self.q0)

    def dense(self, which: str) -> list[list[SqrtRational]]:
        n = self.dim
        m = [[ZERO] * n for _ in range(n)]
        if which == "q0":
            for i, v in enumerate(self.q0):
                m[i][i] = SqrtRational(v)
        elif which == "qplus":
            for i, v in enumerate(self.qplus):
                m[i + 1][i] = v
        elif which == "qminus":
            for i, v in enumerate(self.qminus):
                m[i][i + 1] = v
        else:
            raise ValueError(f"unknown generator {which!r}")
        return m

    def as_floats(self, which: str) -> np.ndarray:
        return np.array([[x.to_float() for x in row] for row in self.dense(which)])

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "dim": self.dim,
            "truncated": self.truncated,
            "q0": [format_rational(v) for v in self.q0],
            "qplus": [v.to_json() for v in self.qplus],
            "qminus": [v.to_json() for v in self.qminus],
        }


def _ladder(params, start, count, raise_sq, lower_sq, truncated=False) -> TripleRep:
    """Assemble a rep from Q0 = start + i and squared ladder entries.

    ``raise_sq(i)`` is the squared Q+ amplitude from state i to i+1, and
    ``lower_sq(i)`` the squared Q- amplitude from state i to i-1.
    """
    q0 = tuple(start + i for i in range(count))
    qplus = tuple(sqrt_exact(raise_sq(i)) for i in range(count - 1))
    qminus = tuple(sqrt_exact(lower_sq(i + 1)) for i in range(count - 1))
    return TripleRep(params, q0, qplus, qminus, truncated)


def build_su2_rep(j) -> TripleRep:
    params = ClassParams(ClassId.SU2, j)
    require_valid(params)
    j = params.spin
    dim = int(2 * j + 1)
    # state i has m = i - j
    return _ladder(params, -j, dim,
                   lambda i: (j - (i - j)) * (j + (i - j) + 1),
                   lambda i: (j + (i - j)) * (j - (i - j) + 1))


def build_su11_rep(k, nmax: int) -> TripleRep:
    k = as_rational(k)
    if k <= 0:
        raise InvalidParams(f"k={k} must be positive")
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    params = ClassParams(ClassId.SU11, k, extended=(2 * k).denominator != 1)
    return _ladder(params, k, nmax + 1,
                   lambda n: (2 * k + n) * (n + 1),
                   lambda n: (2 * k + n - 1) * n,
                   truncated=True)


def build_rep(params: ClassParams, nmax: Optional[int] = None) -> TripleRep:
    """Matrix irrep of any class; ``nmax`` (kept states minus one) is
    required for the infinite families and ignored otherwise."""
    v = require_valid(params)
    cls, s, l = params.cls, params.spin, params.l
    if cls is ClassId.SU2:
        return build_su2_rep(s)
    if cls is ClassId.SU11:
        if nmax is None:
            raise ValueError("su(1,1) irreps are infinite: nmax is required")
        return build_su11_rep(s, nmax)

    if cls is ClassId.QMinus2:
        top = s if v.case == "I" else 2 * l
        dim = int(top + s + 1)
        m = lambda i: i - s  # noqa: E731
        return _ladder(params, -s - l, dim,
                       lambda i: (s - m(i)) * (s + m(i) + 1) * (2 * l - m(i)),
                       lambda i: (s + m(i)) * (s - m(i) + 1) * (2 * l - m(i) + 1))
    if cls is ClassId.QPlus2:
        dim = int(2 * s + 1)
        m = lambda i: i - s  # noqa: E731
        return _ladder(params, -s - l, dim,
                       lambda i: (s - m(i)) * (s + m(i) + 1) * (m(i) - 2 * l + 1),
                       lambda i: (s + m(i)) * (s - m(i) + 1) * (m(i) - 2 * l))
    if cls is ClassId.QMinus11:
        dim = int(2 * l - s + 1)
        return _ladder(params, s - l, dim,
                       lambda n: (n + 2 * s) * (n + 1) * (2 * l - s - n),
                       lambda n: (n + 2 * s - 1) * n * (2 * l - s - n + 1))
    if nmax is None:
        raise ValueError("Q+(1,1) irreps are infinite: nmax is required")
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    return _ladder(params, s - l, nmax + 1,
                   lambda n: (n + 2 * s) * (n + 1) * (n + s - 2 * l + 1),
                   lambda n: (n + 2 * s - 1) * n * (n + s - 2 * l),
                   truncated=True)


# ------------------------------------------------------------- verification


@dataclass
class RelationReport:
    """Outcome of an exact commutator check.

    ``violations`` holds ``(relation, row, residual)`` for every nonzero
    residual on a checked row; boundary rows of truncated reps are listed
    separately and never counted as passing or failing.
    """

    rows_checked: int = 0
    boundary_rows: list[int] = field(default_factory=list)
    violations: list[tuple[str, int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def max_violation(self) -> Optional[tuple[str, int, str]]:
        def size(v):
            try:
                return abs(float(Fraction(v[2])))
            except ValueError:
                return float("inf")
        return max(self.violations, key=size, default=None)

    def to_json(self) -> dict:
        out = {"ok": self.ok, "rows_checked": self.rows_checked,
               "boundary_rows": self.boundary_rows}
        if self.violations:
            rel, row, res = self.max_violation
            out["max_violation"] = {"relation": rel, "row": row, "residual": res}
            out["n_violations"] = len(self.violations)
        return out


def _pair(x: SqrtRational, y: SqrtRational) -> SqrtRational:
    return x * y


def check_ladder_relations(q0: Sequence[Fraction], qplus: Sequence[SqrtRational],
                           qminus: Sequence[SqrtRational], f: Callable[[Fraction], Fraction],
                           truncated: bool = False) -> RelationReport:
    """[Q0, Q±] = ±Q± and [Q+, Q-] = f(Q0) on ladder-form matrices."""
    rep = RelationReport()
    n = len(q0)
    for i in range(n - 1):
        gap = q0[i + 1] - q0[i]
        if gap != 1:
            if qplus[i]:
                rep.violations.append(("[Q0,Q+]=Q+", i + 1, str((gap - 1) * qplus[i].to_float())))
            if qminus[i]:
                rep.violations.append(("[Q0,Q-]=-Q-", i, str((1 - gap) * qminus[i].to_float())))
    for i in range(n):
        if truncated and i == n - 1:
            rep.boundary_rows.append(i)
            continue
        rep.rows_checked += 1
        up = _pair(qplus[i - 1], qminus[i - 1]) if i > 0 else ZERO
        down = _pair(qminus[i], qplus[i]) if i < n - 1 else ZERO
        try:
            residual = up - down - SqrtRational(f(q0[i]))
        except NotClosedError:
            rep.violations.append(("[Q+,Q-]=f(Q0)", i, "irrational"))
            continue
        if residual:
            rep.violations.append(("[Q+,Q-]=f(Q0)", i, str(residual.rational()
                                                             if residual.is_rational
                                                             else residual.to_float())))
    return rep


def verify_relations(rep: TripleRep) -> RelationReport:
    f = structure_function(class_structure_constants(rep.params))
    return check_ladder_relations(rep.q0, rep.qplus, rep.qminus, f, rep.truncated)


def casimir_diag(rep: TripleRep) -> list[Fraction]:
    """Diagonal of Q+ Q- + p(Q0) with p the canonical Casimir correction."""
    p = casimir_correction(structure_function(class_structure_constants(rep.params)))
    out = []
    for i, q in enumerate(rep.q0):
        up = _pair(rep.qplus[i - 1], rep.qminus[i - 1]) if i > 0 else ZERO
        out.append(up.rational() + p(q))
    return out


# --------------------------------------------------- Tavis-Cummings and friends


@dataclass
class TCResult:
    params: ClassParams
    omega: Fraction
    g: Fraction
    shift: Fraction                      # 2*omega*l on the diagonal
    coupling: tuple[SqrtRational, ...]   # g times the ladder entries
    matrix: np.ndarray
    eigenvalues: np.ndarray


def tavis_cummings_matrix(params: ClassParams, omega=1, g=1) -> TCResult:
    """H = omega (J0 + a†a) + g (J+ a + J- a†) in the (j, l) irrep of Q-(2).

    J0 + a†a = 2L acts as 2l, and J+ a, J- a† are Q+ and Q-.  The
    coupling is taken real: a complex phase is removed by a diagonal
    unitary and leaves the spectrum alone.
    """
    if params.cls is not ClassId.QMinus2:
        raise InvalidParams("the Tavis-Cummings Hamiltonian lives on Q-(2) irreps")
    omega, g = as_rational(omega), as_rational(g)
    if omega <= 0:
        raise ValueError("omega must be positive")
    rep = build_rep(params)
    shift = 2 * omega * params.l
    coupling = tuple(v * g for v in rep.qplus)
    d = np.full(rep.dim, float(shift))
    e = np.array([c.to_float() for c in coupling])
    h = np.diag(d)
    if rep.dim > 1:
        h += np.diag(e, -1) + np.diag(e, 1)
        evals = eigvalsh_tridiagonal(d, e)
    else:
        evals = d.copy()
    return TCResult(params, omega, g, shift, coupling, h, np.sort(evals))


def x_generator_check(params: ClassParams) -> RelationReport:
    """Q-(2) with X3 = Q0 + L: [X+, X-] = -3 X3^2 + (4L+1) X3 + J^2."""
    if params.cls is not ClassId.QMinus2:
        raise InvalidParams("X generators are defined for Q-(2)")
    rep = build_rep(params)
    j, l = params.spin, params.l
    x3 = [q + l for q in rep.q0]
    f = Polynomial([j * (j + 1), 4 * l + 1, -3])
    return check_ladder_relations(x3, rep.qplus, rep.qminus, f)


@dataclass
class DeformedOscillator:
    """N = Q0, A = Q-/sqrt(l(l+1) - k(1-k)); ``a_super[i] = <i|A|i+1>``."""

    params: ClassParams
    n_diag: tuple[Fraction, ...]
    a_super: tuple[SqrtRational, ...]
    F: Polynomial
    report: RelationReport

    def dense_a(self) -> list[list[SqrtRational]]:
        n = len(self.n_diag)
        m = [[ZERO] * n for _ in range(n)]
        for i, v in enumerate(self.a_super):
            m[i][i + 1] = v
        return m


def deformed_oscillator(params: ClassParams) -> DeformedOscillator:
    if params.cls is not ClassId.QMinus11:
        raise InvalidParams("the quadratic oscillator is built from Q-(1,1)")
    rep = build_rep(params)
    k, l = params.spin, params.l
    norm = l * (l + 1) - k * (1 - k)
    if norm <= 0:
        raise ValueError(f"l(l+1) - k(1-k) = {norm} must be positive")
    scale = sqrt_exact(norm)
    a = tuple(v / scale for v in rep.qminus)
    adag = tuple(v / scale for v in rep.qplus)
    F = Polynomial([1, -(2 * l - 1) / norm, Fraction(-3) / norm])
    # [A, A†] = F(N)  <=>  [A†, A] = -F(N), which is the ladder form with A† raising
    report = check_ladder_relations(rep.q0, adag, a, lambda x: -F(x))
    return DeformedOscillator(params, rep.q0, a, F, report)
