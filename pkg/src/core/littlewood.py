"""Littlewood decomposition on boundary words and the GKS core vector."""
from fractions import Fraction
from typing import Sequence, Tuple

from ..models.cores import CoreVector, Decomposition, StructureReport
from ..models.partition import Partition
from ..models.word import BoundaryWord
from ..utils.exceptions import DecompositionError, VCodingError
from .partitions import conjugate, is_doubled_distinct, is_self_conjugate
from .words import decode, encode, to_partition


def _check_modulus(t: int) -> None:
    if t < 2:
        raise DecompositionError(f"modulus must be at least 2, got {t}")


def decompose(p: Partition, t: int) -> Decomposition:
    """Phi_t: residue-k subword -> nu^(k); sorted subwords -> core."""
    _check_modulus(t)
    word = encode(p)
    subwords = [word.subword(k, t) for k in range(t)]
    quotient = tuple(to_partition(sub) for sub in subwords)
    charges = CoreVector(t, tuple(sub.charge for sub in subwords))
    return Decomposition(t, core_from_vector(charges), quotient)


def core(p: Partition, t: int) -> Partition:
    return decompose(p, t).core


def quotient(p: Partition, t: int) -> Tuple[Partition, ...]:
    return decompose(p, t).quotient


def _word_from_runners(t: int, n: Sequence[int], quot: Sequence[Partition]) -> BoundaryWord:
    floor = t * min(n_k - nu.length for n_k, nu in zip(n, quot))
    zeros = set()
    for k, (n_k, nu) in enumerate(zip(n, quot)):
        for i, part in enumerate(nu.parts, start=1):
            zeros.add(t * (part - i + n_k) + k)
        i = nu.length + 1
        while t * (n_k - i) + k >= floor:
            zeros.add(t * (n_k - i) + k)
            i += 1
    return BoundaryWord(floor, frozenset(zeros))


def compose(d: Decomposition) -> Partition:
    _check_modulus(d.t)
    if len(d.quotient) != d.t:
        raise DecompositionError(f"quotient must have {d.t} entries")
    vector = core_vector(d.core, d.t)
    return decode(_word_from_runners(d.t, vector.n, d.quotient))


def core_vector(core_partition: Partition, t: int) -> CoreVector:
    """n_i = index of the first 1 in the residue-i subword."""
    _check_modulus(t)
    word = encode(core_partition)
    n = []
    for k in range(t):
        sub = word.subword(k, t)
        if sub.zeros:
            raise DecompositionError(f"{core_partition} is not a {t}-core")
        n.append(sub.floor)
    return CoreVector(t, tuple(n))


def core_from_vector(v: CoreVector) -> Partition:
    if not v.is_balanced:
        raise DecompositionError(f"core vector must sum to 0, got {v.n}")
    empty = [Partition(())] * v.t
    return decode(_word_from_runners(v.t, v.n, empty))


def weight_from_core_vector(v: CoreVector) -> int:
    if not v.is_balanced:
        raise DecompositionError(f"core vector must sum to 0, got {v.n}")
    weight = Fraction(v.t, 2) * sum(x * x for x in v.n) + sum(i * x for i, x in enumerate(v.n))
    return int(weight)


def _dd_rank(v: CoreVector) -> int:
    g = v.t
    if g < 4 or g % 2:
        raise VCodingError(f"DD reduction needs an even modulus g = 2t+2 >= 4, got {g}")
    t = g // 2 - 1
    n = v.n
    if n[0] != 0 or n[t + 1] != 0 or any(n[i] != -n[g - i] for i in range(1, g)):
        raise VCodingError(f"{n} lacks the DD_({g}) symmetry")
    return t


def dd_reduced_weight(v: CoreVector) -> int:
    """|w| = 2((t+1) sum n_i^2 + sum (i-t-1) n_i), i = 1..t, for g = 2t+2."""
    t = _dd_rank(v)
    head = v.n[1 : t + 1]
    return 2 * ((t + 1) * sum(x * x for x in head) + sum((i - t - 1) * x for i, x in enumerate(head, start=1)))


def _sc_rank(v: CoreVector) -> int:
    g = v.t
    if g < 2 or g % 2:
        raise VCodingError(f"SC reduction needs an even modulus g = 2t, got {g}")
    if any(v.n[i] != -v.n[g - 1 - i] for i in range(g)):
        raise VCodingError(f"{v.n} lacks the SC_({g}) symmetry")
    return g // 2


def sc_reduced_weight(v: CoreVector) -> int:
    """|w| = sum_{i<t} (2t n_i^2 + (2(i-t)+1) n_i) for g = 2t."""
    t = _sc_rank(v)
    return sum(2 * t * x * x + (2 * (i - t) + 1) * x for i, x in enumerate(v.n[:t]))


def dd_vector(t: int, restricted: Sequence[int]) -> CoreVector:
    """Full DD_(2t+2) vector from (n_1, ..., n_t)."""
    g = 2 * t + 2
    n = [0] * g
    for i, x in enumerate(restricted, start=1):
        n[i] = x
        n[g - i] = -x
    return CoreVector(g, tuple(n))


def sc_vector(t: int, restricted: Sequence[int]) -> CoreVector:
    """Full SC_(2t) vector from (n_0, ..., n_{t-1})."""
    g = 2 * t
    n = [0] * g
    for i, x in enumerate(restricted):
        n[i] = x
        n[g - 1 - i] = -x
    return CoreVector(g, tuple(n))


def check_dd_structure(p: Partition, t: int) -> StructureReport:
    d = decompose(p, t)
    q = d.quotient
    clauses = {
        "input_dd": is_doubled_distinct(p),
        "core_dd": is_doubled_distinct(d.core),
        "nu0_dd": is_doubled_distinct(q[0]),
        "conjugate_pairs": all(q[k] == conjugate(q[t - k]) for k in range(1, t)),
    }
    if t % 2 == 0:
        clauses["middle_sc"] = is_self_conjugate(q[t // 2])
    return StructureReport(p, t, clauses)


def check_sc_structure(p: Partition, t: int) -> StructureReport:
    d = decompose(p, t)
    q = d.quotient
    clauses = {
        "input_sc": is_self_conjugate(p),
        "core_sc": is_self_conjugate(d.core),
        "conjugate_pairs": all(q[k] == conjugate(q[t - 1 - k]) for k in range(t)),
    }
    if t % 2 == 1:
        clauses["middle_sc"] = is_self_conjugate(q[(t - 1) // 2])
    return StructureReport(p, t, clauses)
