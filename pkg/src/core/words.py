"""Partitions as bi-infinite 0/1 words.

The 0-letters of s(p) sit exactly at {p_i - i : i >= 1} (parts padded with
zeros), the 1-letters at {j - 1 - p'_j : j >= 1}.
"""
from typing import Dict

from ..models.partition import Box, Partition
from ..models.word import BoundaryWord, IndexPair
from ..utils.exceptions import WordError
from .partitions import boxes


def encode(p: Partition) -> BoundaryWord:
    zeros = frozenset(part - i for i, part in enumerate(p.parts, start=1))
    return BoundaryWord(-p.length, zeros)


def to_partition(word: BoundaryWord) -> Partition:
    """s^{-1} of an arbitrary word: the median is re-derived, not required."""
    shift = word.charge
    descending = sorted(word.zeros, reverse=True)
    return Partition.of(z + i - shift for i, z in enumerate(descending, start=1))


def decode(word: BoundaryWord) -> Partition:
    if not word.is_balanced:
        raise WordError(
            f"unbalanced word: charge {word.charge}, expected 0 ({word.render()})"
        )
    return to_partition(word)


def box_index_pairs(p: Partition) -> Dict[Box, IndexPair]:
    """Box (r, c) -> (c - 1 - p'_c, p_r - r); the gap is the hook length."""
    return {
        box: IndexPair(box.col - 1 - p.column(box.col), p.part(box.row) - box.row)
        for box in boxes(p)
    }


def box_position(word: BoundaryWord, pair: IndexPair) -> tuple:
    """Recover (row, col) of the box attached to ``pair``.

    The row counts 0-letters at or after j; the column counts 1-letters at or
    before i.
    """
    if word.letter(pair.i) != 1 or word.letter(pair.j) != 0 or pair.i >= pair.j:
        raise WordError(f"{pair} is not a (1, 0) index pair of {word.render()}")
    row = sum(1 for z in word.zeros if z >= pair.j)
    col = len(word.ones_between(word.floor, pair.i + 1))
    return row, col


def is_above_diagonal(word: BoundaryWord, pair: IndexPair) -> bool:
    """True iff the box of ``pair`` has eps = +1 (on or above the diagonal)."""
    row, col = box_position(word, pair)
    return row <= col


def absolute_index_rule(pair: IndexPair) -> bool:
    """The literal test |i| <= |j|; it does not track eps in general."""
    return abs(pair.i) <= abs(pair.j)
