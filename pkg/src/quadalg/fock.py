"""Truncated multi-mode Fock spaces with exact sparse ladder operators.

The space is the box of occupation tuples with per-mode cutoffs.  An
operator that would push a state out of the box drops that image and
remembers the column in ``leaks``; products propagate leaks, so any
identity can be checked on exactly the states where truncation played
no part ("cutoff-safe" states).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .algebra import ClassId, ClassParams, dimension_of, require_valid
from .exact import NotClosedError, SqrtRational, format_rational, sqrt_exact
from .reps import TripleRep


class CutoffError(ValueError):
    """A requested basis state lies outside the cutoff box."""


@dataclass(frozen=True)
class FockSpace:
    cutoffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cutoffs", tuple(int(c) for c in self.cutoffs))
        if any(c < 0 for c in self.cutoffs):
            raise ValueError("cutoffs must be nonnegative")

    @property
    def n_modes(self) -> int:
        return len(self.cutoffs)

    @property
    def size(self) -> int:
        out = 1
        for c in self.cutoffs:
            out *= c + 1
        return out

    def states(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(c + 1) for c in self.cutoffs))

    def contains(self, state) -> bool:
        return all(0 <= n <= c for n, c in zip(state, self.cutoffs))

    def index(self, state) -> int:
        if len(state) != self.n_modes or not self.contains(state):
            raise CutoffError(f"state {tuple(state)} is outside cutoffs {self.cutoffs}")
        i = 0
        for n, c in zip(state, self.cutoffs):
            i = i * (c + 1) + n
        return i

    def state(self, index: int) -> tuple[int, ...]:
        out = []
        for c in reversed(self.cutoffs):
            index, n = divmod(index, c + 1)
            out.append(n)
        return tuple(reversed(out))


class SparseOperator:
    """Exact operator on a FockSpace, stored column-wise.

    ``cols[j]`` maps row index to a nonzero SqrtRational.  ``leaks`` is
    the set of columns whose true image was cut by the box.
    """

    __slots__ = ("space", "cols", "leaks")

    def __init__(self, space: FockSpace, cols=None, leaks=frozenset()):
        self.space = space
        self.cols: dict[int, dict[int, SqrtRational]] = cols or {}
        self.leaks: frozenset[int] = frozenset(leaks)

    @classmethod
    def diagonal(cls, space: FockSpace, fn) -> "SparseOperator":
        cols = {}
        for i, s in enumerate(space.states()):
            v = SqrtRational.of(fn(s))
            if v:
                cols[i] = {i: v}
        return cls(space, cols)

    @classmethod
    def identity(cls, space: FockSpace) -> "SparseOperator":
        return cls.diagonal(space, lambda s: 1)

    def entry(self, row: int, col: int) -> SqrtRational:
        return self.cols.get(col, {}).get(row, SqrtRational(0))

    def entries(self) -> dict[tuple[int, int], SqrtRational]:
        return {(r, c): v for c, col in self.cols.items() for r, v in col.items()}

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        cols: dict[int, dict[int, SqrtRational]] = {}
        leaks = set(other.leaks)
        for j, col in other.cols.items():
            acc: dict[int, SqrtRational] = {}
            for k, bv in col.items():
                if k in self.leaks:
                    leaks.add(j)
                for i, av in self.cols.get(k, {}).items():
                    acc[i] = acc[i] + av * bv if i in acc else av * bv
            acc = {i: v for i, v in acc.items() if v}
            if acc:
                cols[j] = acc
        return SparseOperator(self.space, cols, leaks)

    def _combine(self, other: "SparseOperator", sign: int) -> "SparseOperator":
        cols = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            tgt = cols.setdefault(j, {})
            for i, v in col.items():
                v = v if sign > 0 else -v
                tgt[i] = tgt[i] + v if i in tgt else v
                if not tgt[i]:
                    del tgt[i]
            if not tgt:
                del cols[j]
        return SparseOperator(self.space, cols, self.leaks | other.leaks)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c) -> "SparseOperator":
        c = SqrtRational.of(c)
        if not c:
            return SparseOperator(self.space, {}, self.leaks)
        cols = {j: {i: v * c for i, v in col.items()} for j, col in self.cols.items()}
        return SparseOperator(self.space, cols, self.leaks)

    def transpose(self) -> "SparseOperator":
        """Adjoint for real entries.  Leak tracking does not survive
        transposition, so only use it on leak-free operators."""
        cols: dict[int, dict[int, SqrtRational]] = {}
        for j, col in self.cols.items():
            for i, v in col.items():
                cols.setdefault(i, {})[j] = v
        return SparseOperator(self.space, cols)

    def apply(self, state) -> dict[tuple[int, ...], SqrtRational]:
        col = self.cols.get(self.space.index(state), {})
        return {self.space.state(i): v for i, v in sorted(col.items())}

    def to_json(self) -> list[dict]:
        out = []
        for (r, c), v in sorted(self.entries().items()):
            out.append({"row": r, "col": c, "coeff": format_rational(v.coeff),
                        "radicand": v.radicand})
        return out


def commutator(x: SparseOperator, y: SparseOperator) -> SparseOperator:
    return x @ y - y @ x


def ladder(space: FockSpace, mode: int, kind: str) -> SparseOperator:
    """a† (kind='raise') or a (kind='lower') on one mode, with a†a = N."""
    if not 0 <= mode < space.n_modes:
        raise ValueError(f"mode {mode} out of range for {space.n_modes} modes")
    if kind not in ("raise", "lower"):
        raise ValueError("kind must be 'raise' or 'lower'")
    cut = space.cutoffs[mode]
    cols, leaks = {}, set()
    for j, s in enumerate(space.states()):
        n = s[mode]
        if kind == "lower":
            if n == 0:
                continue
            t, amp = n - 1, n
        else:
            if n == cut:
                leaks.add(j)
                continue
            t, amp = n + 1, n + 1
        target = s[:mode] + (t,) + s[mode + 1:]
        cols[j] = {space.index(target): sqrt_exact(amp)}
    return SparseOperator(space, cols, leaks)


def number(space: FockSpace, mode: int) -> SparseOperator:
    return SparseOperator.diagonal(space, lambda s: s[mode])


def _lin(space: FockSpace, weights, const=0) -> SparseOperator:
    """Diagonal operator const + sum_i weights[i] N_i."""
    w = [Fraction(x) for x in weights]
    const = Fraction(const)
    return SparseOperator.diagonal(space, lambda s: const + sum(a * n for a, n in zip(w, s)))


def _product(*ops: SparseOperator) -> SparseOperator:
    out = ops[-1]
    for op in reversed(ops[:-1]):
        out = op @ out
    return out


def _require_modes(space: FockSpace, n: int):
    if space.n_modes != n:
        raise ValueError(f"expected a {n}-mode space, got {space.n_modes} modes")


def schwinger_su2(space: FockSpace):
    """(J0, J+, J-, L) from two modes: J+ = a1† a2, L = (N1 + N2 + 1)/2."""
    _require_modes(space, 2)
    a1u, a1d = ladder(space, 0, "raise"), ladder(space, 0, "lower")
    a2u, a2d = ladder(space, 1, "raise"), ladder(space, 1, "lower")
    j0 = _lin(space, (Fraction(1, 2), Fraction(-1, 2)))
    return j0, a1u @ a2d, a1d @ a2u, _lin(space, (Fraction(1, 2), Fraction(1, 2)), Fraction(1, 2))


def schwinger_su11(space: FockSpace):
    """(K0, K+, K-, L) from two modes: K+ = a1† a2†, L = (N1 - N2)/2."""
    _require_modes(space, 2)
    a1u, a1d = ladder(space, 0, "raise"), ladder(space, 0, "lower")
    a2u, a2d = ladder(space, 1, "raise"), ladder(space, 1, "lower")
    k0 = _lin(space, (Fraction(1, 2), Fraction(1, 2)), Fraction(1, 2))
    return k0, a1u @ a2u, a1d @ a2d, _lin(space, (Fraction(1, 2), Fraction(-1, 2)))


@dataclass
class Realization:
    cls: ClassId
    q0: SparseOperator
    qplus: SparseOperator
    qminus: SparseOperator
    central_l: SparseOperator
    casimir2: SparseOperator   # J^2 for the su(2)-based classes, K^2 otherwise

    @property
    def generators(self):
        return {"Q0": self.q0, "Q+": self.qplus, "Q-": self.qminus}

    @property
    def centrals(self):
        name = "J" if self.cls in (ClassId.QMinus2, ClassId.QPlus2) else "K"
        return {"L": self.central_l, name: self.casimir2}


_REALIZATION_CACHE: dict = {}


def realize(cls: ClassId, space: FockSpace) -> Realization:
    """Three-mode bosonic realization of one of the four quadratic classes."""
    _require_modes(space, 3)
    key = (cls, space)
    if key in _REALIZATION_CACHE:
        return _REALIZATION_CACHE[key]
    up = [ladder(space, i, "raise") for i in range(3)]
    dn = [ladder(space, i, "lower") for i in range(3)]
    q = Fraction(1, 4)
    h = Fraction(1, 2)
    if cls is ClassId.QMinus2:
        q0 = _lin(space, (q, -q, -2 * q))
        qp, qm = _product(up[0], dn[1], dn[2]), _product(dn[0], up[1], up[2])
        big_l = _lin(space, (q, -q, 2 * q))
    elif cls is ClassId.QPlus2:
        q0 = _lin(space, (q, -q, 2 * q))
        qp, qm = _product(up[0], dn[1], up[2]), _product(dn[0], up[1], dn[2])
        big_l = _lin(space, (q, -q, -2 * q))
    elif cls is ClassId.QMinus11:
        q0 = _lin(space, (q, q, -2 * q), q)
        qp, qm = _product(up[0], up[1], dn[2]), _product(dn[0], dn[1], up[2])
        big_l = _lin(space, (q, q, 2 * q), q)
    elif cls is ClassId.QPlus11:
        q0 = _lin(space, (q, q, 2 * q), q)
        qp, qm = _product(up[0], up[1], up[2]), _product(dn[0], dn[1], dn[2])
        big_l = _lin(space, (q, q, -2 * q), q)
    else:
        raise ValueError(f"{cls.value} is not a quadratic class")

    if cls in (ClassId.QMinus2, ClassId.QPlus2):
        j0 = _lin(space, (h, -h, 0))
        jp, jm = up[0] @ dn[1], dn[0] @ up[1]
        cas = jp @ jm + j0 @ (j0 - SparseOperator.identity(space))
    else:
        k0 = _lin(space, (h, h, 0), h)
        kp, km = up[0] @ up[1], dn[0] @ dn[1]
        cas = kp @ km - k0 @ (k0 - SparseOperator.identity(space))
    out = Realization(cls, q0, qp, qm, big_l, cas)
    _REALIZATION_CACHE[key] = out
    return out


# ------------------------------------------------------------ blocks


def block_states(params: ClassParams, nmax: Optional[int] = None) -> list[tuple[int, int, int]]:
    """Fock states spanning the (spin, l) irrep, in ascending Q0 order."""
    v = require_valid(params)
    if v.beyond_fock:
        raise ValueError(f"{params} cannot be presented in terms of the three-boson "
                         "Fock states (k outside 1/2, 1, 3/2, ...)")
    cls, s, l = params.cls, params.spin, params.l

    def ints(*xs):
        return tuple(int(x) for x in xs)

    if cls is ClassId.QMinus2:
        dim = dimension_of(params)
        ms = [-s + i for i in range(dim)]
        return [ints(s + m, s - m, 2 * l - m) for m in ms]
    if cls is ClassId.QPlus2:
        ms = [-s + i for i in range(int(2 * s + 1))]
        return [ints(s + m, s - m, m - 2 * l) for m in ms]
    if cls is ClassId.QMinus11:
        return [ints(n + 2 * s - 1, n, 2 * l - s - n) for n in range(int(2 * l - s) + 1)]
    if cls is ClassId.QPlus11:
        if nmax is None:
            raise ValueError("Q+(1,1) blocks are infinite: nmax is required")
        return [ints(n + 2 * s - 1, n, n + s - 2 * l) for n in range(nmax + 1)]
    raise ValueError(f"{cls.value} has no three-mode block")


def invariant_block(params: ClassParams, space: FockSpace,
                    nmax: Optional[int] = None) -> TripleRep:
    """Restrict the bosonic realization to the irrep's Fock states.

    Raises :class:`CutoffError` naming the first basis state outside the
    box, and ValueError if the block is not closed under Q±.
    """
    states = block_states(params, nmax)
    for st in states:
        if not space.contains(st):
            raise CutoffError(f"basis state {st} of {params} exceeds cutoffs {space.cutoffs}")
    real = realize(params.cls, space)
    idx = [space.index(st) for st in states]
    inside = set(idx)
    truncated = params.cls is ClassId.QPlus11

    q0 = []
    for i in idx:
        v = real.q0.entry(i, i)
        q0.append(v.rational())
    qplus, qminus = [], []
    for a, b in zip(idx, idx[1:]):
        qplus.append(real.qplus.entry(b, a))
        qminus.append(real.qminus.entry(a, b))

    # closure: the images of every block state stay in the block
    for pos, i in enumerate(idx):
        for name, op in (("Q+", real.qplus), ("Q-", real.qminus)):
            if truncated and name == "Q+" and pos == len(idx) - 1:
                continue
            stray = [r for r in op.cols.get(i, {}) if r not in inside]
            if stray:
                raise ValueError(f"{name} maps block state {states[pos]} to "
                                 f"{space.state(stray[0])} outside the block")
    return TripleRep(params, tuple(q0), tuple(qplus), tuple(qminus), truncated)


# ---------------------------------------------------------- verification


@dataclass
class CentralReport:
    cls: ClassId
    cutoffs: tuple[int, ...]
    states_checked: int = 0
    states_excluded: int = 0
    failures: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {"class": self.cls.value, "cutoffs": list(self.cutoffs), "ok": self.ok,
               "states_checked": self.states_checked,
               "states_excluded": self.states_excluded}
        if self.failures:
            out["first_failure"] = {"pair": self.failures[0][0],
                                    "state": list(self.failures[0][1])}
        return out


def check_vanishing(space: FockSpace, ops: dict[str, SparseOperator]) -> tuple[int, int, list]:
    """Count safe states, excluded states, and failures for ops meant to be 0.

    A state is excluded if it leaks in any of the operators.
    """
    excluded = set()
    for op in ops.values():
        excluded |= op.leaks
    failures = []
    for name, op in ops.items():
        for j, col in op.cols.items():
            if j not in excluded and col:
                failures.append((name, space.state(j)))
    checked = space.size - len(excluded)
    return checked, len(excluded), failures


def verify_central(cls: ClassId, space: FockSpace) -> CentralReport:
    """[C, Q0] = [C, Q±] = 0 for C in (L, J^2 or K^2), on cutoff-safe states."""
    real = realize(cls, space)
    ops = {}
    for cname, c in real.centrals.items():
        for gname, g in real.generators.items():
            try:
                ops[f"[{cname},{gname}]"] = commutator(c, g)
            except NotClosedError as exc:  # pragma: no cover - would be a bug
                raise AssertionError(f"[{cname},{gname}] left its square class") from exc
    checked, excluded, failures = check_vanishing(space, ops)
    return CentralReport(cls, space.cutoffs, checked, excluded, failures)


def eigenspace_states(cls: ClassId, space: FockSpace, l, casimir2) -> list[tuple[int, ...]]:
    """Box states on which L = l and J^2 (or K^2) = casimir2, both diagonal."""
    real = realize(cls, space)
    out = []
    for i, st in enumerate(space.states()):
        if i in real.casimir2.leaks:
            continue
        if real.central_l.entry(i, i).coeff == l and real.casimir2.entry(i, i).coeff == casimir2:
            out.append(st)
    return out
