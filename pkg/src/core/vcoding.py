"""V_{g,t}-codings of DD_(2t+2) and SC_(2t) cores."""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Set, Tuple

from ..models.cores import CoreVector, Family, GInterval, VCoding
from ..models.partition import Partition
from ..utils.exceptions import TauError, VCodingError
from .littlewood import core_from_vector, sc_reduced_weight
from .partitions import (
    boxes,
    durfee,
    h_plus_stats,
    is_core,
    is_doubled_distinct,
    is_self_conjugate,
)
from .words import box_index_pairs, encode


def beta_vector(p: Partition, g: int) -> Tuple[int, ...]:
    """beta_i = (index of the last 0 in the residue-i subword) + g."""
    word = encode(p)
    return tuple(word.last_zero(i, g) + g for i in range(g))


def sorting_permutation(beta: Sequence[int]) -> Tuple[int, ...]:
    """Residues listed by decreasing beta."""
    if len(set(beta)) != len(beta):
        raise VCodingError(f"beta values are not pairwise distinct: {tuple(beta)}")
    return tuple(sorted(range(len(beta)), key=lambda i: -beta[i]))


def _check_family(g: int, t: int, family: Family) -> Family:
    family = Family(family)
    expected = 2 * t + 2 if family is Family.DD else 2 * t
    if t < 1 or g != expected:
        raise VCodingError(f"{family.value.upper()} codings need g = {expected} for t = {t}, got g = {g}")
    return family


def vcoding(core: Partition, g: int, t: int, family: Family) -> VCoding:
    family = _check_family(g, t, family)
    in_family = is_doubled_distinct(core) if family is Family.DD else is_self_conjugate(core)
    if not in_family or not is_core(core, g):
        raise VCodingError(f"{core} is not in {family.value.upper()}_({g})")
    beta = beta_vector(core, g)
    sigma = sorting_permutation(beta)
    return VCoding(g, t, tuple(beta[i] for i in sigma[:t]), family)


def _full_beta(V: VCoding) -> Tuple[int, ...]:
    g, t = V.g, V.t
    family = _check_family(g, t, V.family)
    v = V.v
    if len(v) != t or any(a <= b for a, b in zip(v, v[1:])):
        raise VCodingError(f"coding must be {t} strictly decreasing integers: {v}")
    residues = [x % g for x in v]
    if len(set(residues)) != t:
        raise VCodingError(f"duplicate residues mod {g}: {v}")
    beta = {}
    if family is Family.DD:
        if any(x <= t + 1 for x in v):
            raise VCodingError(f"DD codings need v_i > t+1 = {t + 1}: {v}")
        if any(r in (0, t + 1) for r in residues):
            raise VCodingError(f"residues 0 and {t + 1} are reserved: {v}")
        partner = lambda x: g - x  # noqa: E731
        beta[0], beta[t + 1] = 0, t + 1
    else:
        if any(x < t for x in v):
            raise VCodingError(f"SC codings need v_i >= t = {t}: {v}")
        partner = lambda x: g - 1 - x  # noqa: E731
    for x in v:
        mate = partner(x)
        if mate % g in beta or x % g in beta:
            raise VCodingError(f"complementary residue clash mod {g}: {v}")
        beta[x % g] = x
        beta[mate % g] = mate
    return tuple(beta[i] for i in range(g))


def core_from_vcoding(V: VCoding) -> Partition:
    beta = _full_beta(V)
    n = []
    for i, b in enumerate(beta):
        if (b - i) % V.g:
            raise VCodingError(f"beta_{i} = {b} gives a non-integer n_{i}")
        n.append((b - i) // V.g)
    return core_from_vector(CoreVector(V.g, tuple(n)))


def weight_from_vcoding(V: VCoding) -> Fraction:
    """|w| = (1/g) sum r_i^2 - (g/2 - 1)(g - 1)/12 for DD_(2t+2)."""
    if Family(V.family) is not Family.DD:
        raise VCodingError("the r-weight formula applies to DD codings")
    g = V.g
    return Fraction(sum(r * r for r in V.r), g) - Fraction((g // 2 - 1) * (g - 1), 12)


def sc_weight_from_vcoding(V: VCoding) -> int:
    if Family(V.family) is not Family.SC:
        raise VCodingError("expected an SC coding")
    beta = _full_beta(V)
    n = tuple((b - i) // V.g for i, b in enumerate(beta))
    return sc_reduced_weight(CoreVector(V.g, n))


# Product formula for DD_(2t+2) cores


def tau_exponents(core: Partition, t: int) -> Tuple[Counter, Counter]:
    """Exponent maps {argument: power} of tau on each side of the product formula."""
    g = 2 * t + 2
    lhs = Counter()
    for box in boxes(core):
        lhs[box.hook - box.eps * g] += 1
        lhs[box.hook] -= 1
    V = vcoding(core, g, t, Family.DD)
    r = V.r
    stats = h_plus_stats(core, g)
    rhs = Counter()
    for i, a in stats.alpha.items():
        rhs[-i] += a
        rhs[i] -= a
    for i in range(1, t + 1):
        rhs[r[i - 1]] += 1
        rhs[i] -= 1
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            rhs[r[i - 1] - r[j - 1]] += 1
            rhs[j - i] -= 1
            rhs[r[i - 1] + r[j - 1]] += 1
            rhs[g - i - j] -= 1
    return _net(lhs), _net(rhs)


def _net(counter: Counter) -> Counter:
    return Counter({k: v for k, v in counter.items() if v})


@dataclass(frozen=True)
class TauSides:
    lhs_num: object
    lhs_den: object
    rhs_num: object
    rhs_den: object

    @property
    def equal(self) -> bool:
        return self.lhs_num * self.rhs_den == self.rhs_num * self.lhs_den


def _evaluate(exponents: Counter, tau: Callable[[int], object], one) -> Tuple[object, object]:
    num, den = one, one
    for arg in sorted(exponents):
        value = tau(arg)
        if value == 0:
            raise TauError(arg)
        power = exponents[arg]
        for _ in range(abs(power)):
            if power > 0:
                num = num * value
            else:
                den = den * value
    return num, den


def tau_product_identity(core: Partition, t: int, tau: Callable[[int], object], one=1) -> TauSides:
    """Both sides of the hook/coding product formula evaluated with ``tau``.

    Each side is returned as numerator and denominator so that tau may land in
    a ring with exact cross-multiplication (e.g. Laurent polynomials).
    """
    lhs, rhs = tau_exponents(core, t)
    ln, ld = _evaluate(lhs, tau, one)
    rn, rd = _evaluate(rhs, tau, one)
    return TauSides(ln, ld, rn, rd)


# First hook and parity


def g_interval(kind: str, m: int, M: int, g: int) -> GInterval:
    return GInterval(kind, m, M, g)


def first_hook_intervals(V: VCoding) -> Tuple[Set[int], Set[int]]:
    """Index sets of the first hook as unions of g-intervals.

    H_{1,+} collects the 1-letter index i_s of each eps=+1 box, H_{1,-} the
    0-letter index j_s of each eps=-1 box.
    """
    if Family(V.family) is not Family.DD:
        raise VCodingError("first-hook intervals are stated for DD codings")
    g, v = V.g, V.v
    if v[0] < g:
        raise VCodingError("the empty core has no first hook")
    top, low = v[0] - g, -v[0] + g
    plus = [g_interval("+", low, top, g), g_interval("+", 0, top, g), g_interval("+", g // 2, top, g)]
    minus = [
        g_interval("-", low, v[0] - 2 * g, g),
        g_interval("-", low, -g, g),
        g_interval("-", low, -g // 2, g),
    ]
    for vi in v[1:]:
        plus += [g_interval("+", vi, top, g), g_interval("+", -vi + g, top, g)]
        # lower endpoint -v_1 + g; v_1 - g would leave the interval empty
        minus += [g_interval("-", low, vi - g, g), g_interval("-", low, -vi, g)]
    h_plus = set().union(*(iv.elements for iv in plus))
    h_minus = set().union(*(iv.elements for iv in minus))
    return h_plus, h_minus


def first_hook_boxes(core: Partition) -> Tuple[Set[int], Set[int]]:
    """Direct enumeration: i_s over row 1, j_s over column 1 below row 1."""
    pairs = box_index_pairs(core)
    h_plus = {pair.i for box, pair in pairs.items() if box.row == 1}
    h_minus = {pair.j for box, pair in pairs.items() if box.col == 1 and box.row > 1}
    return h_plus, h_minus


def sigma_parity(core: Partition, t: int) -> int:
    """Parity attached to the coding of a DD_(2t+2) core (0 even, 1 odd).

    With s_j = beta_j - t - 1 (j = 1..t), reorder the rows of
    det(x^{s_j} - x^{-s_j}) into det(x^{r_i} - x^{-r_i}): each positive s_j
    and each inversion of the reordering flips the sign.
    """
    g = 2 * t + 2
    beta = beta_vector(core, g)
    s = [beta[j] - t - 1 for j in range(1, t + 1)]
    order = sorted(range(t), key=lambda j: -abs(s[j]))
    inversions = sum(1 for a in range(t) for b in range(a + 1, t) if order[a] > order[b])
    positives = sum(1 for x in s if x > 0)
    return (positives + inversions) % 2


def parity_check(core: Partition, t: int) -> Tuple[int, int]:
    """(|H_+| mod 2, (d + parity) mod 2); equal for every DD_(2t+2) core."""
    g = 2 * t + 2
    stats = h_plus_stats(core, g)
    return stats.h_plus % 2, (durfee(core) + sigma_parity(core, t)) % 2
