"""Level counting for H = N1 + N2 + 2 N3 + 2.

Level N = H - 2 has L = (N+1)/4 under Q-(1,1).  Its degeneracy is
counted three ways: the closed form in m = N // 4, brute enumeration of
(n1, n2, n3), and a sum of Q-(1,1) irrep dimensions where every k > 1/2
counts twice (the mirrored Fock basis with n1 - n2 = 1 - 2k carries the
same irrep).  Dropping the n1 <-> n2 interchange gives partitions instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import ClassId, ClassParams, dimension_of, validate_params


def _check_level(N: int):
    if N < 0:
        raise ValueError(f"level N={N} must be nonnegative")


def degeneracy_closed(N: int) -> int:
    _check_level(N)
    m, r = divmod(N, 4)
    return ((2 * m + 1) ** 2, (2 * m + 1) * (2 * m + 2),
            4 * (m + 1) ** 2, 2 * (m + 1) * (2 * m + 3))[r]


def degeneracy_brute(N: int) -> int:
    """Ordered solutions of n1 + n2 + 2 n3 = N."""
    _check_level(N)
    count = 0
    for n3 in range(N // 2 + 1):
        for n1 in range(N - 2 * n3 + 1):
            count += 1  # n2 = N - 2 n3 - n1 is fixed and nonnegative
    return count


@lru_cache(maxsize=1024)
def k_list(N: int) -> tuple[tuple[Fraction, int, int], ...]:
    """(k, dim, weight) for each Q-(1,1) irrep at L = (N+1)/4, ascending in k."""
    _check_level(N)
    l = Fraction(N + 1, 4)
    out = []
    # k = 2l - t for t = 0, 1, ... keeps 2l - k a nonnegative integer
    t = 0
    while 2 * l - t > 0:
        p = ClassParams(ClassId.QMinus11, 2 * l - t, l)
        if validate_params(p):
            out.append((p.spin, dimension_of(p), 1 if p.spin == Fraction(1, 2) else 2))
        t += 1
    return tuple(reversed(out))


def degeneracy_via_reps(N: int) -> tuple[int, tuple[tuple[Fraction, int, int], ...]]:
    ks = k_list(N)
    return sum(w * d for _, d, w in ks), ks


def partitions_closed(N: int) -> int:
    _check_level(N)
    m, r = divmod(N, 4)
    return (m + 1) * (2 * m + 1) if r < 2 else (m + 1) * (2 * m + 3)


def partitions_brute(N: int) -> int:
    """Solutions of n1 + n2 + 2 n3 = N with n1 >= n2."""
    _check_level(N)
    count = 0
    for n3 in range(N // 2 + 1):
        rest = N - 2 * n3
        for n2 in range(rest // 2 + 1):
            count += 1  # n1 = rest - n2 >= n2
    return count


def partitions_via_reps(N: int) -> int:
    return sum(d for _, d, _ in k_list(N))


def symmetric_solutions(N: int) -> int:
    """Solutions with n1 == n2."""
    _check_level(N)
    return sum(1 for n3 in range(N // 2 + 1) if (N - 2 * n3) % 2 == 0)


@dataclass(frozen=True)
class DegeneracyRecord:
    N: int
    l: Fraction
    closed: int
    brute: int
    via_reps: int
    k_list: tuple[tuple[Fraction, int, int], ...]

    @property
    def agree(self) -> bool:
        return self.closed == self.brute == self.via_reps

    def k_list_text(self) -> str:
        return ";".join(f"{k}:{d}:{w}" for k, d, w in self.k_list)


@dataclass(frozen=True)
class PartitionRecord:
    N: int
    closed: int
    brute: int
    dim_sum: int

    @property
    def agree(self) -> bool:
        return self.closed == self.brute == self.dim_sum


def degeneracy_record(N: int) -> DegeneracyRecord:
    via, ks = degeneracy_via_reps(N)
    return DegeneracyRecord(N, Fraction(N + 1, 4), degeneracy_closed(N),
                            degeneracy_brute(N), via, ks)


def partition_record(N: int) -> PartitionRecord:
    return PartitionRecord(N, partitions_closed(N), partitions_brute(N), partitions_via_reps(N))


def aniso_spectrum(Nmax: int) -> list[tuple[int, int]]:
    """(eigenvalue, degeneracy) of H = N1 + N2 + 2 N3 + 2 for N = 0..Nmax.

    Degeneracies come from the closed form and are checked against a
    histogram of H over all occupations with N1 + N2 + 2 N3 <= Nmax.
    """
    if Nmax < 0:
        raise ValueError("Nmax must be nonnegative")
    hist: dict[int, int] = {}
    for n3 in range(Nmax // 2 + 1):
        for n1 in range(Nmax - 2 * n3 + 1):
            for n2 in range(Nmax - 2 * n3 - n1 + 1):
                e = n1 + n2 + 2 * n3 + 2
                hist[e] = hist.get(e, 0) + 1
    out = []
    for N in range(Nmax + 1):
        d = degeneracy_closed(N)
        if hist.get(N + 2, 0) != d:
            raise AssertionError(f"level {N + 2}: closed form {d} vs enumeration {hist.get(N + 2)}")
        out.append((N + 2, d))
    return out
