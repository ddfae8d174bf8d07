"""Series identities: both sides expanded into one truncated space and compared.

Summand builders are module-level so that ``parallel_map`` can ship them to
worker processes; the reduction is an exact merge of coefficient maps.
"""
import time
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, List, Sequence, Tuple

from ..algebra.laurent import LaurentPoly
from ..algebra.products import euler, type_c_dual_product, type_c_product, weyl_denominator_c, x_vars
from ..algebra.schur import so_odd, sp
from ..algebra.series import SeriesSpace, TruncatedSeries, series_sum
from ..models.cores import Family
from ..models.partition import Partition
from ..models.report import RunConfig, VerificationReport
from ..utils.exceptions import ConfigurationError
from ..utils.logging_setup import get_logger
from ..utils.parallel import parallel_map
from .enumeration import doubled_distinct, family_cores_by_coding, partitions, self_conjugate
from .partitions import boxes, durfee, h_plus_stats, hooks
from .vcoding import vcoding

logger = get_logger(__name__)

U = LaurentPoly.var("u")
Z = LaurentPoly.var("z")


def require(run: RunConfig, *fields: str) -> None:
    missing = [f for f in fields if getattr(run, f) is None]
    if missing:
        raise ConfigurationError(f"{run.identity} needs {', '.join(missing)}")


def start_report(run: RunConfig) -> Tuple[VerificationReport, float]:
    logger.info(f"Verifying {run.identity} with {run.params()}")
    return VerificationReport(run.identity, run.params()), time.perf_counter()


def finish_report(report: VerificationReport, started: float) -> VerificationReport:
    report.elapsed = round(time.perf_counter() - started, 3)
    logger.info(
        f"{report.identity}: {report.status} "
        f"({report.mismatches} mismatches, {report.terms_enumerated}, {report.elapsed}s)"
    )
    return report


def compare_series(report: VerificationReport, lhs: TruncatedSeries, rhs: TruncatedSeries) -> None:
    for grade in lhs.mismatches(rhs):
        where = lhs.space.label(grade)
        left = lhs.coeffs.get(grade, LaurentPoly())
        right = rhs.coeffs.get(grade, LaurentPoly())
        logger.warning(f"{report.identity}: mismatch at {where}")
        report.record(where, left, right)


def sum_terms(
    run: RunConfig,
    space: SeriesSpace,
    func: Callable,
    items: Sequence,
    desc: str,
    context: tuple = (),
) -> TruncatedSeries:
    terms = parallel_map(func, [(space, *context, item) for item in items], run.workers, desc, run.progress)
    return series_sum(space, terms)


def parity_sign(n: int) -> int:
    return -1 if n % 2 else 1


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


# Nekrasov-Okounkov


def no_summand(args) -> TruncatedSeries:
    space, p = args
    coeff = LaurentPoly.constant(1)
    for h, count in hooks(p).items():
        coeff = coeff * (1 - Z * Fraction(1, h * h)) ** count
    return TruncatedSeries.monomial(space, coeff, T=p.weight)


def verify_nekrasov_okounkov(run: RunConfig) -> VerificationReport:
    """sum_P T^|l| prod (1 - z/h^2) = prod_k (1 - T^k)^{z-1} over Q[z]."""
    require(run, "T_cap")
    report, started = start_report(run)
    space = SeriesSpace.build({"T": run.T_cap})
    items = partitions(run.T_cap)
    lhs = sum_terms(run, space, no_summand, items, "Partitions")
    rhs = euler(space).power(Z - 1)
    report.terms_enumerated = {"partitions": len(items)}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


# Dehaye-Han / Iqbal-Nazir-Raza-Salem


def hande_summand(args) -> TruncatedSeries:
    space, p = args
    term = TruncatedSeries.monomial(space, 1, T=p.weight)
    for h, count in hooks(p).items():
        factor = (
            TruncatedSeries.binomial(space, U, q=h)
            * TruncatedSeries.binomial(space, U ** -1, q=h)
            * TruncatedSeries.geometric(space, 1, q=h).pow_int(2)
        )
        term = term * factor.pow_int(count)
    return term


def hande_product(space: SeriesSpace, T_cap: int, q_cap: int) -> TruncatedSeries:
    result = TruncatedSeries.one(space)
    for k in range(1, T_cap + 1):
        for r in range(1, q_cap + 2):
            numerator = TruncatedSeries.binomial(space, U, q=r, T=k) * TruncatedSeries.binomial(
                space, U ** -1, q=r, T=k
            )
            denominator = TruncatedSeries.geometric(space, 1, q=r - 1, T=k) * TruncatedSeries.geometric(
                space, 1, q=r + 1, T=k
            )
            result = result * (numerator * denominator).pow_int(r)
    return result


def verify_hande(run: RunConfig) -> VerificationReport:
    require(run, "T_cap", "q_cap")
    report, started = start_report(run)
    space = SeriesSpace.build({"T": run.T_cap, "q": run.q_cap})
    items = partitions(run.T_cap)
    lhs = sum_terms(run, space, hande_summand, items, "Partitions")
    rhs = hande_product(space, run.T_cap, run.q_cap)
    report.terms_enumerated = {"partitions": len(items)}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


# Petreolle DD formula


def petreolle_summand(args) -> TruncatedSeries:
    space, p = args
    coeff = LaurentPoly.constant(parity_sign(durfee(p)))
    for box in boxes(p):
        ratio = Fraction(2, box.hook * box.eps)
        coeff = coeff * (1 - Z * ratio - ratio)
    return TruncatedSeries.monomial(space, coeff, T=p.weight // 2)


def verify_petreolle(run: RunConfig) -> VerificationReport:
    """sum_DD (-1)^d T^{|l|/2} prod (1 - (2z+2)/(h eps)) = prod (1 - T^k)^{2z^2+z}."""
    require(run, "T_cap")
    report, started = start_report(run)
    space = SeriesSpace.build({"T": run.T_cap})
    items = doubled_distinct(2 * run.T_cap)
    lhs = sum_terms(run, space, petreolle_summand, items, "DD partitions")
    rhs = euler(space).power(2 * Z * Z + Z)
    report.terms_enumerated = {"dd_partitions": len(items)}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


# Macdonald identity, type C


def lattice_range(t: int, T_cap: int) -> List[int]:
    """m with (t+1) m^2 - t |m| <= T_cap, the least T-exponent a coordinate can carry."""
    values = [0]
    m = 1
    while (t + 1) * m * m - t * m <= T_cap:
        values += [m, -m]
        m += 1
    return sorted(values)


def _macdonald_entry(space: SeriesSpace, t: int, x: LaurentPoly, s: int, m_values: Iterable[int]):
    """sum_m x^{(2t+2)m} ((x T^m)^{s-t-1} - (x T^m)^{t+1-s}) with the T^{(t+1)m^2} weight."""
    terms = []
    for m in m_values:
        base = (t + 1) * m * m
        shift = x ** ((2 * t + 2) * m)
        low, high = base + m * (s - t - 1), base + m * (t + 1 - s)
        terms.append(TruncatedSeries.monomial(space, shift * x ** (s - t - 1), T=low))
        terms.append(TruncatedSeries.monomial(space, -(shift * x ** (t + 1 - s)), T=high))
    return series_sum(space, terms)


def macdonald_c_sum(t: int, space: SeriesSpace, T_cap: int) -> Tuple[TruncatedSeries, int]:
    """The lattice side; the m-sum factors per coordinate, leaving a t x t determinant."""
    x = x_vars(t)
    m_values = lattice_range(t, T_cap)
    entries = [[_macdonald_entry(space, t, x[i], s, m_values) for s in range(1, t + 1)] for i in range(t)]
    total = TruncatedSeries.zero(space)
    for sigma in permutations(range(t)):
        term = TruncatedSeries.one(space).scale(parity_sign(_inversions(sigma)))
        for i in range(t):
            term = term * entries[i][sigma[i]]
        total = total + term
    return total, len(m_values) ** t


def verify_macdonald_c(run: RunConfig) -> VerificationReport:
    require(run, "t", "T_cap")
    report, started = start_report(run)
    space = SeriesSpace.build({"T": run.T_cap})
    lhs = type_c_product(run.t, space).scale(weyl_denominator_c(run.t))
    rhs, lattice_points = macdonald_c_sum(run.t, space, run.T_cap)
    report.terms_enumerated = {"lattice_points": lattice_points}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


# Hook-length forms of the type C and C-dual identities


def type_c_hook_summand(args) -> TruncatedSeries:
    space, t, core = args
    coding = vcoding(core, 2 * t + 2, t, Family.DD)
    mu = Partition.of(coding.mu)
    stats = h_plus_stats(core, 2 * t + 2)
    sign = parity_sign(durfee(core) + stats.h_plus)
    return TruncatedSeries.monomial(space, sp(mu, t) * sign, T=Fraction(core.weight, 2))


def verify_type_c_hooks(run: RunConfig) -> VerificationReport:
    """sum_{DD_(2t+2)} (-1)^{d+|H+|} T^{|w|/2} sp_mu(x) = type C product."""
    require(run, "t", "T_cap")
    report, started = start_report(run)
    t = run.t
    space = SeriesSpace.build({"T": run.T_cap})
    cores = family_cores_by_coding(Family.DD, 2 * t + 2, 2 * run.T_cap)
    lhs = sum_terms(run, space, type_c_hook_summand, cores, "DD cores", (t,))
    rhs = type_c_product(t, space)
    report.terms_enumerated = {"cores": len(cores)}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


def type_c_dual_hook_summand(args) -> TruncatedSeries:
    space, t, core = args
    coding = vcoding(core, 2 * t, t, Family.SC)
    mu = Partition.of(coding.mu)
    stats = h_plus_stats(core, 2 * t)
    sign = parity_sign(stats.h_plus + stats.h_plus_diag + durfee(core))
    return TruncatedSeries.monomial(space, so_odd(mu, t) * sign, T=Fraction(core.weight, 2))


def verify_type_c_dual_hooks(run: RunConfig) -> VerificationReport:
    """sum_{SC_(2t)} (-1)^{|H+|+|H+ n D|+d} T^{|w|/2} so_mu(x) = type C-dual product."""
    require(run, "t", "T_cap")
    report, started = start_report(run)
    t = run.t
    space = SeriesSpace.build({"T": run.T_cap}, {"T": 2})
    cores = family_cores_by_coding(Family.SC, 2 * t, int(2 * Fraction(run.T_cap)))
    lhs = sum_terms(run, space, type_c_dual_hook_summand, cores, "SC cores", (t,))
    rhs = type_c_dual_product(t, space)
    report.terms_enumerated = {"cores": len(cores)}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


# q-analogues for DD and SC


def noc_summand(args) -> TruncatedSeries:
    space, p = args
    term = TruncatedSeries.monomial(space, (-U) ** durfee(p), T=p.weight // 2)
    for box in boxes(p):
        term = term * (
            TruncatedSeries.binomial(space, U ** (-2 * box.eps), q=box.hook)
            * TruncatedSeries.geometric(space, 1, q=box.hook)
        )
        if box.on_diagonal:
            half = box.hook // 2
            term = term * (
                TruncatedSeries.binomial(space, -U, q=half) * TruncatedSeries.geometric(space, -(U ** -1), q=half)
            )
    return term


def noc_product(space: SeriesSpace, T_cap: int, q_cap: int, printed: bool = False) -> TruncatedSeries:
    """Product side for DD.

    The printed statement carries (1 + u q^{r-1} T^m)/(1 + u^{-1} q^r T^m) and
    u^{-2} q^{r+2}, u^2 q^{r-1}; its T^1 q^0 coefficient is u - u^2 while the
    sum side gives -u. ``printed=True`` reproduces that form.
    """
    result = TruncatedSeries.one(space)
    sign = -1 if printed else 1
    for m in range(1, T_cap + 1):
        for r in range(1, q_cap + 2):
            linear = TruncatedSeries.binomial(space, sign * U, q=r - 1, T=m) * TruncatedSeries.geometric(
                space, sign * U ** -1, q=r, T=m
            )
            low, high = (r + 2, r - 1) if printed else (r + 1, r)
            paired = (
                TruncatedSeries.binomial(space, U ** -2, q=low, T=m)
                * TruncatedSeries.binomial(space, U ** 2, q=high, T=m)
                * TruncatedSeries.geometric(space, 1, q=r, T=m)
                * TruncatedSeries.geometric(space, 1, q=r + 1, T=m)
            )
            result = result * linear * paired.pow_int((r + 1) // 2)
    return result


def verify_noc(run: RunConfig) -> VerificationReport:
    require(run, "T_cap", "q_cap")
    report, started = start_report(run)
    space = SeriesSpace.build({"T": run.T_cap, "q": run.q_cap})
    items = doubled_distinct(2 * run.T_cap)
    lhs = sum_terms(run, space, noc_summand, items, "DD partitions")
    rhs = noc_product(space, run.T_cap, run.q_cap, run.printed)
    report.terms_enumerated = {"dd_partitions": len(items)}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


def nosc_summand(args) -> TruncatedSeries:
    space, p = args
    term = TruncatedSeries.monomial(space, parity_sign(durfee(p)), T=Fraction(p.weight, 2))
    for box in boxes(p):
        term = term * (
            TruncatedSeries.binomial(space, U ** (-2 * box.eps), q=2 * box.hook)
            * TruncatedSeries.geometric(space, 1, q=2 * box.hook)
        )
        if box.on_diagonal:
            term = term * (
                TruncatedSeries.binomial(space, U, q=box.hook)
                * TruncatedSeries.geometric(space, U ** -1, q=box.hook)
            )
    return term


def nosc_product(space: SeriesSpace, T_cap, q_cap: int, printed: bool = False) -> TruncatedSeries:
    """Product side for SC.

    The printed statement raises (1 - q^{2r} T^m) to r + 1 - floor((r+1)/2);
    that form fails at T^1 q^4. The corrected exponent is r - floor(r/2).
    """
    result = TruncatedSeries.one(space)
    for m in range(1, int(2 * Fraction(T_cap)) + 1):
        half = Fraction(m, 2)
        result = (
            result
            * TruncatedSeries.binomial(space, 1, T=half)
            * TruncatedSeries.geometric(space, 1, T=m)
        )
        for r in range(1, q_cap // 2 + 2):
            odd = TruncatedSeries.binomial(space, U ** -1, q=2 * r - 1, T=half) * TruncatedSeries.geometric(
                space, U, q=2 * r - 1, T=half
            )
            ceil_half = (r + 1) // 2
            first = r + 1 - (r + 1) // 2 if printed else ceil_half
            paired = (
                TruncatedSeries.binomial(space, U ** -2, q=2 * (r + 1), T=m)
                * TruncatedSeries.binomial(space, U ** 2, q=2 * r, T=m)
                * TruncatedSeries.geometric(space, 1, q=2 * (r + 1), T=m)
            ).pow_int(ceil_half)
            result = result * odd * paired * TruncatedSeries.geometric(space, 1, q=2 * r, T=m).pow_int(first)
    return result


def verify_nosc(run: RunConfig) -> VerificationReport:
    require(run, "T_cap", "q_cap")
    report, started = start_report(run)
    space = SeriesSpace.build({"T": run.T_cap, "q": run.q_cap}, {"T": 2})
    items = self_conjugate(int(2 * Fraction(run.T_cap)))
    lhs = sum_terms(run, space, nosc_summand, items, "SC partitions")
    rhs = nosc_product(space, run.T_cap, run.q_cap, run.printed)
    report.terms_enumerated = {"sc_partitions": len(items)}
    compare_series(report, lhs, rhs)
    return finish_report(report, started)


verify_thm11 = verify_type_c_hooks
verify_thm12 = verify_type_c_dual_hooks
