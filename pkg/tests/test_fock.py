from fractions import Fraction

import pytest

from quadalg.algebra import QUADRATIC_CLASSES, ClassId, ClassParams, enumerate_params
from quadalg.exact import SqrtRational
from quadalg.fock import (CutoffError, FockSpace, SparseOperator, block_states, commutator,
                          eigenspace_states, invariant_block, ladder, verify_central)
from quadalg.reps import build_rep
from quadalg.spectra import k_list

F = Fraction
BOX = FockSpace((8, 8, 8))


def test_space_indexing():
    sp = FockSpace((2, 1))
    assert sp.size == 6
    for i, st in enumerate(sp.states()):
        assert sp.index(st) == i and sp.state(i) == st
    assert not sp.contains((3, 0))


def test_canonical_commutator_on_safe_states():
    sp = FockSpace((5,))
    a, ad = ladder(sp, 0, "lower"), ladder(sp, 0, "raise")
    c = commutator(a, ad)
    for j in range(sp.size):
        if j not in c.leaks:
            assert c.entry(j, j) == SqrtRational(1)
    assert c.leaks == {5}


def test_identity_and_transpose():
    sp = FockSpace((3, 3))
    a = ladder(sp, 1, "raise")
    assert (SparseOperator.identity(sp) @ a).entries() == a.entries()
    assert a.transpose().entries() == ladder(sp, 1, "lower").entries()


@pytest.mark.parametrize("cls", QUADRATIC_CLASSES)
def test_central_elements(cls):
    report = verify_central(cls, FockSpace((6, 6, 6)))
    assert report.ok and report.states_checked > 0


@pytest.mark.parametrize("cls", QUADRATIC_CLASSES)
def test_blocks_equal_matrix_reps(cls):
    n = 0
    for p in enumerate_params(cls, 3, 8):
        nmax = 3 if cls is ClassId.QPlus11 else None
        try:
            block = invariant_block(p, BOX, nmax)
        except CutoffError:
            continue
        assert block == build_rep(p, nmax), p
        n += 1
    assert n > 0


def test_cutoff_error_names_state():
    with pytest.raises(CutoffError, match=r"\(0, 8, 8\)"):
        invariant_block(ClassParams(ClassId.QMinus2, 4, 2), FockSpace((1, 1, 1)))


def test_beyond_fock_is_refused():
    p = ClassParams(ClassId.QMinus11, F(1, 3), F(2, 3), extended=True)
    with pytest.raises(ValueError, match="three-boson Fock states"):
        block_states(p)


@pytest.mark.parametrize("N", range(7))
def test_eigenspace_dimension_bookkeeping(N):
    # mirrored bases n1 - n2 = +-(2k-1) double every k > 1/2
    l = F(N + 1, 4)
    for k, dim, weight in k_list(N):
        states = eigenspace_states(ClassId.QMinus11, BOX, l, k * (1 - k))
        assert len(states) == weight * dim
