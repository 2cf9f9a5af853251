"""Partition combinatorics: diagrams, boxes, occupation encoding, norms."""

import pytest

from qtau.algebra_core import QPoly
from qtau.partitions import (b_lambda, conjugate, contains, count_in_box,
                             dominates, enumerate_in_box, frobenius,
                             from_frobenius, hook_partition, in_box, length,
                             normalize, occupation_from_partition,
                             partition_from_occupation, partitions_of,
                             qfactorial, weight)


def test_conjugate():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((3, 3, 1)) == (3, 2, 2)
    for lam in partitions_of(6):
        assert conjugate(conjugate(lam)) == lam


def test_frobenius_coordinates():
    assert frobenius(()) == ()
    assert frobenius((1,)) == ((0, 0),)
    coords = frobenius((3, 3, 1))
    assert coords == ((2, 2), (1, 0))
    # weight identity: |lam| = sum(arms) + sum(legs) + diagonal
    assert 7 == sum(a for a, _ in coords) + sum(b for _, b in coords) + 2
    for lam in partitions_of(7):
        assert from_frobenius(frobenius(lam)) == lam
    assert hook_partition(2, 2) == (3, 1, 1)


def test_enumerate_in_box():
    assert enumerate_in_box(0, 5) == [()]
    assert set(enumerate_in_box(2, 2)) == {(), (1,), (2,), (1, 1), (2, 1),
                                           (2, 2)}
    assert len(enumerate_in_box(2, 2)) == count_in_box(2, 2) == 6
    assert enumerate_in_box(1, 4) == [(), (1,), (2,), (3,), (4,)]
    for lam in enumerate_in_box(3, 4):
        assert in_box(lam, 3, 4)
    assert not in_box((5,), 3, 4)
    assert not in_box((1, 1, 1, 1), 3, 4)


def test_partition_counts():
    assert len(partitions_of(6)) == 11
    assert partitions_of(0) == [()]
    assert weight((3, 2, 1)) == 6 and length((3, 2, 1)) == 3
    assert normalize([0, 3, 1, 0, 2]) == (3, 2, 1)


def test_containment_and_dominance():
    assert contains((3, 2), (2, 2))
    assert not contains((3, 2), (1, 1, 1))
    assert dominates((4,), (2, 2))
    assert not dominates((2, 2), (4,))


def test_qfactorial_and_b_lambda():
    q = QPoly.gen()
    assert qfactorial(0) == 1
    assert qfactorial(2) == (1 - q) * (1 - q ** 2)
    assert b_lambda(()) == 1
    assert b_lambda((1, 1)) == (1 - q) * (1 - q ** 2)
    assert b_lambda((2, 1)) == (1 - q) * (1 - q)
    # multiplicative over multiplicities: (2,2,1,1,1)
    assert b_lambda((2, 2, 1, 1, 1)) == qfactorial(2) * qfactorial(3)


def test_occupation_encoding():
    assert occupation_from_partition((), 2, 2) == (2, 0, 0)
    assert occupation_from_partition((2, 1), 2, 3) == (0, 1, 1, 0)
    assert occupation_from_partition((2, 2), 3, 2) == (1, 0, 2)
    with pytest.raises(ValueError):
        occupation_from_partition((4,), 2, 3)
    for lam in enumerate_in_box(3, 4):
        occ = occupation_from_partition(lam, 3, 4)
        assert sum(occ) == 3
        back, n = partition_from_occupation(occ)
        assert back == lam and n == 3
