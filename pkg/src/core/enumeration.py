"""Generators for the partition families used by the identities.

Every generator returns members of weight <= max_weight exactly once, sorted
by weight and then by decreasing parts.
"""
import math
from itertools import combinations
from typing import Iterator, List, Optional, Sequence

from ..models.cores import CoreVector, Family, VCoding
from ..models.partition import Partition
from ..utils.exceptions import PartitionError, VCodingError
from ..utils.logging_setup import get_logger
from .littlewood import core_from_vector
from .partitions import from_frobenius, is_core
from .vcoding import core_from_vcoding, sc_weight_from_vcoding, weight_from_vcoding

logger = get_logger(__name__)

FAMILIES = ("p", "sc", "dd", "core", "dd-core", "sc-core")


def canonical_order(items: Sequence[Partition]) -> List[Partition]:
    return sorted(items, key=lambda p: (p.weight, tuple(-x for x in p.parts)))


def _partitions_of(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def partitions(max_weight: int) -> List[Partition]:
    return [Partition(parts) for n in range(max_weight + 1) for parts in _partitions_of(n, n)]


def _strict(budget: int, below: int, cost, lowest: int) -> Iterator[tuple]:
    """Strictly decreasing tuples with entries in [lowest, below) and total cost <= budget."""
    yield ()
    for first in range(lowest, below):
        c = cost(first)
        if c > budget:
            break
        for rest in _strict(budget - c, first, cost, lowest):
            yield (first,) + rest


def strict_partitions(max_weight: int) -> List[Partition]:
    return canonical_order([Partition(parts) for parts in _strict(max_weight, max_weight + 1, int, 1)])


def doubled_distinct(max_weight: int) -> List[Partition]:
    """Frobenius (a | a - 1) over strict a >= 1; weight 2 sum a."""
    found = []
    for a in _strict(max_weight, max_weight + 1, lambda x: 2 * x, 1):
        found.append(from_frobenius(a, tuple(x - 1 for x in a)))
    return canonical_order(found)


def self_conjugate(max_weight: int) -> List[Partition]:
    """Frobenius (a | a) over strict a >= 0; weight sum (2a + 1)."""
    found = []
    for a in _strict(max_weight, max_weight + 1, lambda x: 2 * x + 1, 0):
        found.append(from_frobenius(a, a))
    return canonical_order(found)


def _balanced_vectors(t: int, max_weight: int) -> Iterator[tuple]:
    """Integer vectors summing to 0 with t/2 sum n^2 + sum i n_i <= max_weight.

    Centering i at (t-1)/2 makes every coordinate term nonnegative, which
    bounds each |n_i| separately.
    """
    bound = 0
    while t * (bound + 1) ** 2 - (t - 1) * (bound + 1) <= 2 * max_weight:
        bound += 1
    center2 = t - 1  # twice the center

    def term2(i: int, n: int) -> int:
        return t * n * n + (2 * i - center2) * n

    def walk(i: int, prefix: tuple, used2: int, total: int) -> Iterator[tuple]:
        if i == t - 1:
            n = -total
            if abs(n) <= bound and used2 + term2(i, n) <= 2 * max_weight:
                yield prefix + (n,)
            return
        for n in range(-bound, bound + 1):
            cost = term2(i, n)
            if used2 + cost <= 2 * max_weight:
                yield from walk(i + 1, prefix + (n,), used2 + cost, total + n)

    yield from walk(0, (), 0, 0)


def t_cores(t: int, max_weight: int) -> List[Partition]:
    if t < 2:
        raise PartitionError(f"core modulus must be at least 2, got {t}")
    return canonical_order([core_from_vector(CoreVector(t, n)) for n in _balanced_vectors(t, max_weight)])


def _family_rank(family: Family, g: int) -> int:
    if family is Family.DD:
        if g < 4 or g % 2:
            raise VCodingError(f"DD cores need g = 2t + 2 >= 4, got {g}")
        return g // 2 - 1
    if g < 2 or g % 2:
        raise VCodingError(f"SC cores need g = 2t >= 2, got {g}")
    return g // 2


def family_cores_by_sieve(family: Family, g: int, max_weight: int) -> List[Partition]:
    family = Family(family)
    _family_rank(family, g)
    pool = doubled_distinct(max_weight) if family is Family.DD else self_conjugate(max_weight)
    return [p for p in pool if is_core(p, g)]


def _coding_range(family: Family, g: int, t: int, max_weight: int) -> range:
    if family is Family.DD:
        # each r_i^2 / g is bounded by the weight plus the constant offset
        offset = math.ceil((g // 2 - 1) * (g - 1) / 12)
        r_max = math.isqrt(g * (max_weight + offset))
        return range(t + 2, t + 2 + r_max)
    n_max = 0
    while 2 * t * (n_max + 1) ** 2 - (2 * t - 1) * (n_max + 1) <= max_weight:
        n_max += 1
    return range(t, g * (n_max + 1))


def family_cores_by_coding(family: Family, g: int, max_weight: int) -> List[Partition]:
    """Enumerate valid codings in a weight-bounded box and rebuild each core."""
    family = Family(family)
    t = _family_rank(family, g)
    found = []
    values = _coding_range(family, g, t, max_weight)
    for chosen in combinations(reversed(values), t):
        coding = VCoding(g, t, tuple(chosen), family)
        try:
            if family is Family.DD:
                if weight_from_vcoding(coding) > max_weight:
                    continue
            elif sc_weight_from_vcoding(coding) > max_weight:
                continue
            found.append(core_from_vcoding(coding))
        except VCodingError:
            continue
    logger.debug(f"{len(found)} {family.value} cores of g={g} from codings up to weight {max_weight}")
    return canonical_order(found)


def enumerate_family(name: str, max_weight: int, modulus: Optional[int] = None) -> List[Partition]:
    """Dispatch on a family name from FAMILIES; cores need ``modulus``."""
    if max_weight < 0:
        return []
    if name == "p":
        return partitions(max_weight)
    if name == "sc":
        return self_conjugate(max_weight)
    if name == "dd":
        return doubled_distinct(max_weight)
    if modulus is None:
        raise PartitionError(f"family {name!r} needs a modulus")
    if name == "core":
        return t_cores(modulus, max_weight)
    if name == "dd-core":
        return family_cores_by_coding(Family.DD, modulus, max_weight)
    if name == "sc-core":
        return family_cores_by_coding(Family.SC, modulus, max_weight)
    raise PartitionError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
