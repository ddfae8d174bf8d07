from collections import Counter
from typing import List, Sequence, Tuple

from ..models.partition import EMPTY, Box, HPlusStats, Partition
from ..utils.exceptions import PartitionError


def conjugate(p: Partition) -> Partition:
    return Partition(p.conjugate_parts)


def durfee(p: Partition) -> int:
    """Side of the Durfee square: max s with p_s >= s."""
    d = 0
    for s, part in enumerate(p.parts, start=1):
        if part < s:
            break
        d = s
    return d


def boxes(p: Partition) -> List[Box]:
    """One Box per Ferrers cell, rows first."""
    parts = p.parts
    cols = p.conjugate_parts
    result = []
    for i, part in enumerate(parts, start=1):
        for j in range(1, part + 1):
            hook = (part - j) + (cols[j - 1] - i) + 1
            result.append(Box(i, j, hook, -1 if i > j else 1, i == j))
    return result


def hooks(p: Partition) -> Counter:
    """The multiset H(p)."""
    return Counter(box.hook for box in boxes(p))


def hooks_mod(p: Partition, t: int) -> Counter:
    """Sub-multiset of hooks divisible by ``t``."""
    if t < 1:
        raise PartitionError(f"modulus must be positive, got {t}")
    return Counter(box.hook for box in boxes(p) if box.hook % t == 0)


def is_core(p: Partition, t: int) -> bool:
    return not hooks_mod(p, t)


def diagonal_boxes(p: Partition) -> List[Box]:
    return [box for box in boxes(p) if box.on_diagonal]


def frobenius(p: Partition) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Frobenius coordinates (a | b) with a_i = p_i - i, b_i = p'_i - i."""
    d = durfee(p)
    a = tuple(p.part(i) - i for i in range(1, d + 1))
    b = tuple(p.column(i) - i for i in range(1, d + 1))
    return a, b


def from_frobenius(a: Sequence[int], b: Sequence[int]) -> Partition:
    """Inverse of :func:`frobenius`; both sequences strictly decreasing, >= 0."""
    if len(a) != len(b):
        raise PartitionError("Frobenius coordinates must have equal length")
    for seq in (a, b):
        if any(x < 0 for x in seq) or any(x <= y for x, y in zip(seq, seq[1:])):
            raise PartitionError(f"Frobenius coordinates must be strict and >= 0: {seq}")
    d = len(a)
    if d == 0:
        return EMPTY
    parts = [a[i - 1] + i for i in range(1, d + 1)]
    leg_rows = b[0] + 1
    for i in range(d + 1, leg_rows + 1):
        parts.append(sum(1 for j in range(1, d + 1) if b[j - 1] + j >= i))
    return Partition.of(parts)


def is_self_conjugate(p: Partition) -> bool:
    return p.parts == p.conjugate_parts


def is_doubled_distinct(p: Partition) -> bool:
    a, b = frobenius(p)
    return all(x == y + 1 for x, y in zip(a, b))


def double(distinct: Partition) -> Partition:
    """Shifted double of a strict partition: Frobenius (mu | mu - 1)."""
    mu = distinct.parts
    if any(x <= y for x, y in zip(mu, mu[1:])):
        raise PartitionError(f"double needs strictly decreasing parts: {distinct}")
    return from_frobenius(mu, tuple(m - 1 for m in mu))


def undouble(dd: Partition) -> Partition:
    if not is_doubled_distinct(dd):
        raise PartitionError(f"{dd} is not a doubled distinct partition")
    a, _ = frobenius(dd)
    return Partition(a)


def h_plus_stats(p: Partition, g: int) -> HPlusStats:
    """Counts of eps=+1 boxes with hook < g; ``alpha[i]`` counts hook g - i."""
    alpha = {i: 0 for i in range(1, g)}
    h_plus = h_plus_diag = 0
    for box in boxes(p):
        if box.eps != 1 or box.hook >= g:
            continue
        h_plus += 1
        h_plus_diag += box.on_diagonal
        alpha[g - box.hook] += 1
    return HPlusStats(g=g, h_plus=h_plus, h_plus_diag=h_plus_diag, alpha=alpha)
