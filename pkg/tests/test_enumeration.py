import pytest

from src.core.enumeration import (
    canonical_order,
    doubled_distinct,
    enumerate_family,
    family_cores_by_coding,
    family_cores_by_sieve,
    partitions,
    self_conjugate,
    strict_partitions,
    t_cores,
)
from src.core.partitions import is_core, is_doubled_distinct, is_self_conjugate
from src.models.cores import Family
from src.models.partition import EMPTY, Partition
from src.utils.exceptions import PartitionError, VCodingError


def parts(items):
    return [p.parts for p in items]


def test_partitions():
    assert len(partitions(4)) == 12
    assert partitions(0) == [EMPTY]
    assert parts(partitions(3)) == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


def test_partitions_are_canonically_ordered():
    found = partitions(8)
    assert canonical_order(found) == found
    assert len(set(found)) == len(found)


def test_strict_partitions():
    assert parts(strict_partitions(5)) == [(), (1,), (2,), (3,), (2, 1), (4,), (3, 1), (5,), (4, 1), (3, 2)]


def test_doubled_distinct_and_self_conjugate():
    assert parts(doubled_distinct(4)) == [(), (2,), (3, 1)]
    assert parts(self_conjugate(4)) == [(), (1,), (2, 1), (2, 2)]


@pytest.mark.parametrize("max_weight", [10, 16])
def test_family_generators_match_predicates(max_weight):
    everything = partitions(max_weight)
    assert doubled_distinct(max_weight) == [p for p in everything if is_doubled_distinct(p)]
    assert self_conjugate(max_weight) == [p for p in everything if is_self_conjugate(p)]


def test_two_cores_are_staircases():
    assert parts(t_cores(2, 6)) == [(), (1,), (2, 1), (3, 2, 1)]


@pytest.mark.parametrize("t", [2, 3, 4])
def test_t_cores_match_sieve(t):
    assert t_cores(t, 12) == [p for p in partitions(12) if is_core(p, t)]


@pytest.mark.parametrize(
    "family,g",
    [(Family.DD, 4), (Family.DD, 6), (Family.DD, 8), (Family.SC, 2), (Family.SC, 4), (Family.SC, 6)],
)
def test_coding_generator_matches_sieve(family, g):
    assert family_cores_by_coding(family, g, 30) == family_cores_by_sieve(family, g, 30)


def test_bad_family_modulus():
    with pytest.raises(VCodingError):
        family_cores_by_coding(Family.DD, 5, 10)
    with pytest.raises(VCodingError):
        family_cores_by_sieve(Family.SC, 3, 10)


def test_enumerate_family(fig2):
    assert fig2 in enumerate_family("dd-core", 30, 6)
    assert enumerate_family("p", 0) == [EMPTY]
    assert enumerate_family("dd", -1) == []
    assert enumerate_family("core", 3, 2) == [EMPTY, Partition((1,)), Partition((2, 1))]


def test_enumerate_family_errors():
    with pytest.raises(PartitionError):
        enumerate_family("core", 5)
    with pytest.raises(PartitionError):
        enumerate_family("bogus", 5, 2)
