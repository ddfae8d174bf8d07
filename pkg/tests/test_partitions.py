from collections import Counter

import pytest
from hypothesis import given

from conftest import small_partitions
from src.core.partitions import (
    boxes,
    conjugate,
    diagonal_boxes,
    double,
    durfee,
    frobenius,
    from_frobenius,
    h_plus_stats,
    hooks,
    hooks_mod,
    is_core,
    is_doubled_distinct,
    is_self_conjugate,
    undouble,
)
from src.models.partition import EMPTY, Partition
from src.utils.exceptions import PartitionError


def test_partition_rejects_increasing_parts():
    with pytest.raises(PartitionError):
        Partition((1, 2))


def test_partition_of_drops_zeros():
    assert Partition.of([3, 1, 0, 0]) == Partition((3, 1))


def test_conjugate_and_durfee():
    p = Partition((4, 4, 3, 2))
    assert conjugate(p) == p
    assert durfee(p) == 3
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert durfee(EMPTY) == 0


def test_hooks():
    assert hooks(Partition((2, 1))) == Counter({3: 1, 1: 2})
    assert hooks_mod(Partition((2, 1)), 3) == Counter({3: 1})
    assert is_core(Partition((2, 1)), 2)
    assert not is_core(Partition((2, 1)), 3)


def test_eps_marks_boxes_strictly_below_the_diagonal():
    signs = {(b.row, b.col): b.eps for b in boxes(Partition((2, 2)))}
    assert signs == {(1, 1): 1, (1, 2): 1, (2, 1): -1, (2, 2): 1}
    assert [(b.row, b.col) for b in diagonal_boxes(Partition((2, 2)))] == [(1, 1), (2, 2)]


def test_frobenius():
    assert frobenius(Partition((4, 4, 3, 2))) == ((3, 2, 0), (3, 2, 0))
    assert from_frobenius((3, 1), (2, 0)) == Partition((4, 3, 1))
    with pytest.raises(PartitionError):
        from_frobenius((1, 1), (1, 0))


@given(small_partitions())
def test_frobenius_roundtrip(p):
    assert from_frobenius(*frobenius(p)) == p


@given(small_partitions())
def test_hook_count_is_weight(p):
    assert sum(hooks(p).values()) == p.weight


def test_families():
    assert is_self_conjugate(Partition((2, 1)))
    assert is_doubled_distinct(Partition((2,)))
    assert is_doubled_distinct(Partition((3, 1)))
    assert not is_doubled_distinct(Partition((1,)))
    assert is_doubled_distinct(EMPTY) and is_self_conjugate(EMPTY)


def test_double_and_undouble():
    assert double(Partition((3, 1))) == Partition((4, 3, 1))
    assert undouble(Partition((6, 4, 4, 1, 1))) == Partition((5, 2, 1))
    with pytest.raises(PartitionError):
        double(Partition((2, 2)))
    with pytest.raises(PartitionError):
        undouble(Partition((1,)))


@given(small_partitions())
def test_double_weight(p):
    strict = Partition(tuple(sorted(set(p.parts), reverse=True)))
    dd = double(strict)
    assert dd.weight == 2 * strict.weight
    assert undouble(dd) == strict


def test_h_plus_stats():
    stats = h_plus_stats(Partition((2,)), 4)
    assert stats.h_plus == 2
    assert stats.h_plus_diag == 1
    assert stats.alpha == {1: 0, 2: 1, 3: 1}


def _strict(p):
    return Partition(tuple(sorted(set(p.parts), reverse=True)))


@given(small_partitions())
def test_conjugation_is_a_hook_preserving_involution(p):
    assert conjugate(conjugate(p)) == p
    assert hooks(conjugate(p)) == hooks(p)


@given(small_partitions())
def test_diagonal_hooks_by_family(p):
    strict = _strict(p)
    dd = double(strict)
    assert is_doubled_distinct(dd)
    assert all(box.hook % 2 == 0 for box in diagonal_boxes(dd))
    arms = tuple(part - 1 for part in strict.parts)
    sc = from_frobenius(arms, arms)
    assert is_self_conjugate(sc)
    assert all(box.hook % 2 == 1 for box in diagonal_boxes(sc))
