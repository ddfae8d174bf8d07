import pytest
from hypothesis import given

from conftest import small_partitions
from src.core.partitions import boxes
from src.core.words import (
    absolute_index_rule,
    box_index_pairs,
    box_position,
    decode,
    encode,
    is_above_diagonal,
    to_partition,
)
from src.models.partition import EMPTY, Partition
from src.models.word import BoundaryWord, IndexPair
from src.utils.exceptions import WordError


def test_encode_small_partition():
    word = encode(Partition((2, 1)))
    assert word.letters(-3, 3) == (0, 1, 0, 1, 0, 1)
    assert word.charge == 0


def test_render_empty():
    assert encode(EMPTY).render() == "...00|11..."


def test_floor_is_normalized():
    word = BoundaryWord(0, frozenset({0, 1, 3}))
    assert word.floor == 2
    assert word.zeros == frozenset({3})


@given(small_partitions())
def test_roundtrip(p):
    word = encode(p)
    assert word.is_balanced
    assert decode(word) == p


def test_decode_rejects_unbalanced_word():
    shifted = BoundaryWord(1, frozenset())
    with pytest.raises(WordError):
        decode(shifted)
    assert to_partition(shifted) == EMPTY


@given(small_partitions())
def test_index_pair_gap_is_hook(p):
    for box, pair in box_index_pairs(p).items():
        assert pair.gap == box.hook


@given(small_partitions())
def test_word_recovers_box_and_eps(p):
    word = encode(p)
    for box, pair in box_index_pairs(p).items():
        assert box_position(word, pair) == (box.row, box.col)
        assert is_above_diagonal(word, pair) == (box.eps == 1)


def test_absolute_index_rule_disagrees_on_a_single_box():
    p = Partition((1,))
    (box,) = boxes(p)
    pair = box_index_pairs(p)[box]
    assert pair == IndexPair(-1, 0)
    assert is_above_diagonal(encode(p), pair)
    assert not absolute_index_rule(pair)


def test_pair_alone_does_not_fix_eps():
    # (-2, 0) is the pair of a box below the diagonal of (2,2) and of the corner of (1,1)
    found = []
    for p in (Partition((2, 2)), Partition((1, 1))):
        for box, pair in box_index_pairs(p).items():
            if pair == IndexPair(-2, 0):
                found.append(box.eps)
                assert is_above_diagonal(encode(p), pair) == (box.eps == 1)
    assert sorted(found) == [-1, 1]


def test_box_position_rejects_non_pairs():
    with pytest.raises(WordError):
        box_position(encode(Partition((1,))), IndexPair(0, -1))


def test_subword_and_run_markers():
    word = encode(Partition((1,)))
    even = word.subword(0, 2)
    assert even.floor == 1 and not even.zeros
    assert word.last_zero(0, 2) == 0
    assert word.last_zero(1, 2) == -3
    assert word.first_one(1, 2) == -1
