import pytest

from quadalg.spectra import (aniso_spectrum, degeneracy_brute, degeneracy_closed,
                             degeneracy_record, degeneracy_via_reps, partition_record,
                             partitions_brute, partitions_closed, symmetric_solutions)


@pytest.mark.parametrize("N,want", [(0, 1), (1, 2), (2, 4), (3, 6), (4, 9), (6, 16)])
def test_degeneracy_values(N, want):
    assert degeneracy_closed(N) == degeneracy_brute(N) == degeneracy_via_reps(N)[0] == want


@pytest.mark.parametrize("N,want", [(0, 1), (5, 6), (7, 10)])
def test_partition_values(N, want):
    assert partitions_closed(N) == partitions_brute(N) == want


def test_k_lists():
    assert degeneracy_record(2).k_list_text() == "1/2:2:1;3/2:1:2"
    assert degeneracy_record(3).k_list_text() == "1:2:2;2:1:2"
    assert degeneracy_record(0).k_list_text() == "1/2:1:1"


@pytest.mark.parametrize("N", range(0, 120))
def test_triple_agreement_and_identity(N):
    assert degeneracy_record(N).agree
    assert partition_record(N).agree
    assert degeneracy_brute(N) == 2 * partitions_brute(N) - symmetric_solutions(N)


def test_spectrum():
    assert aniso_spectrum(0) == [(2, 1)]
    assert aniso_spectrum(2) == [(2, 1), (3, 2), (4, 4)]


def test_negative_level():
    with pytest.raises(ValueError):
        degeneracy_closed(-1)
