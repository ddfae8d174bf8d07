"""Per-core checks: each core is tested independently and failures are tallied."""
import random
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from ..algebra.laurent import LaurentPoly, exact_div
from ..algebra.schur import principal_sp
from ..models.cores import Family
from ..models.partition import Partition
from ..models.report import RunConfig, VerificationReport
from ..utils.exceptions import DivisionError, VCodingError
from ..utils.logging_setup import get_logger
from ..utils.parallel import parallel_map
from .enumeration import (
    doubled_distinct,
    family_cores_by_coding,
    family_cores_by_sieve,
    partitions,
    self_conjugate,
    t_cores,
)
from .littlewood import (
    check_dd_structure,
    check_sc_structure,
    compose,
    core_from_vector,
    core_vector,
    dd_reduced_weight,
    decompose,
    sc_reduced_weight,
    weight_from_core_vector,
)
from .partitions import boxes, double, durfee, h_plus_stats, is_doubled_distinct, undouble
from .vcoding import (
    core_from_vcoding,
    first_hook_boxes,
    first_hook_intervals,
    parity_check,
    sc_weight_from_vcoding,
    tau_exponents,
    tau_product_identity,
    vcoding,
    weight_from_vcoding,
)
from .verifiers import finish_report, parity_sign, require, start_report
from .words import decode, encode

logger = get_logger(__name__)

Q = LaurentPoly.var("q")
U = LaurentPoly.var("u")

# (label, ok, lhs, rhs)
Outcome = Tuple[str, bool, str, str]


def _label(p: Partition) -> str:
    return f"({p})"


def run_checks(
    run: RunConfig,
    check: Callable[[tuple], Outcome],
    payloads: Sequence[tuple],
    unit: str,
    desc: str,
) -> VerificationReport:
    report, started = start_report(run)
    outcomes: List[Outcome] = parallel_map(check, payloads, run.workers, desc, run.progress)
    for label, ok, lhs, rhs in outcomes:
        if not ok:
            logger.warning(f"{run.identity}: failure at {label}")
            report.record(label, lhs, rhs)
    report.terms_enumerated = {unit: len(payloads)}
    return finish_report(report, started)


def _dd_cores(run: RunConfig) -> List[Partition]:
    require(run, "t", "max_weight")
    return family_cores_by_coding(Family.DD, 2 * run.t + 2, run.max_weight)


# Principal specialization against the hook product


def schurinter_check(args) -> Outcome:
    t, core = args
    g = 2 * t + 2
    mu = Partition.of(vcoding(core, g, t, Family.DD).mu)
    lhs = principal_sp(mu, t)
    stats = h_plus_stats(core, g)
    numerator = LaurentPoly.monomial(parity_sign(stats.h_plus), q=(t + 1) * durfee(core))
    denominator = LaurentPoly.constant(1)
    for box in boxes(core):
        numerator = numerator * (1 - Q ** (box.hook - g * box.eps))
        denominator = denominator * (1 - Q ** box.hook)
        if box.on_diagonal:
            half = box.hook // 2
            numerator = numerator * (1 + Q ** (t + 1 + half))
            denominator = denominator * (1 + Q ** (half - t - 1))
    try:
        rhs = exact_div(numerator, denominator)
    except DivisionError as e:
        return _label(core), False, str(lhs), f"not a Laurent polynomial, residual {e.residual}"
    return _label(core), lhs == rhs, str(lhs), str(rhs)


def verify_schurinter(run: RunConfig) -> VerificationReport:
    cores = _dd_cores(run)
    return run_checks(run, schurinter_check, [(run.t, c) for c in cores], "cores", "DD cores")


# Product formula over arbitrary tau


def _random_unit(rng: random.Random) -> Fraction:
    value = Fraction(rng.randint(1, 2 ** 31), rng.randint(1, 2 ** 31))
    return value if rng.random() < 0.5 else -value


def tau_check(args) -> Outcome:
    t, seed, samples, core = args
    lhs, rhs = tau_exponents(core, t)
    arguments = sorted(set(lhs) | set(rhs))
    rng = random.Random(f"{seed}:{t}:{core}")
    failures = []
    for k in range(samples):
        values = {a: _random_unit(rng) for a in arguments}
        if not tau_product_identity(core, t, values.__getitem__).equal:
            failures.append(f"sample {k}")
    one = LaurentPoly.constant(1)
    if not tau_product_identity(core, t, lambda x: 1 - Q ** x, one=one).equal:
        failures.append("1 - q^x")
    lhs_text = str(dict(sorted(lhs.items())))
    rhs_text = f"{dict(sorted(rhs.items()))} failing {failures}"
    return _label(core), not failures, lhs_text, rhs_text


def verify_tau_product(run: RunConfig) -> VerificationReport:
    require(run, "seed", "tau_samples")
    cores = _dd_cores(run)
    payloads = [(run.t, run.seed, run.tau_samples, c) for c in cores]
    return run_checks(run, tau_check, payloads, "cores", "DD cores")


# First hook and sign


def _show_hook(sets) -> str:
    return f"+{sorted(sets[0])} -{sorted(sets[1])}"


def first_hook_check(args) -> Outcome:
    t, core = args
    coding = vcoding(core, 2 * t + 2, t, Family.DD)
    from_intervals = first_hook_intervals(coding)
    from_boxes = first_hook_boxes(core)
    return _label(core), from_intervals == from_boxes, _show_hook(from_intervals), _show_hook(from_boxes)


def verify_first_hook(run: RunConfig) -> VerificationReport:
    cores = [c for c in _dd_cores(run) if c.weight]
    return run_checks(run, first_hook_check, [(run.t, c) for c in cores], "cores", "DD cores")


def sign_parity_check(args) -> Outcome:
    t, core = args
    h_parity, coding_parity = parity_check(core, t)
    return _label(core), h_parity == coding_parity, str(h_parity), str(coding_parity)


def verify_sign_parity(run: RunConfig) -> VerificationReport:
    cores = _dd_cores(run)
    return run_checks(run, sign_parity_check, [(run.t, c) for c in cores], "cores", "DD cores")


# Restricted Littlewood decomposition


def structure_check(args) -> Outcome:
    family, t, p = args
    report = check_dd_structure(p, t) if family == Family.DD.value else check_sc_structure(p, t)
    failed = sorted(name for name, ok in report.clauses.items() if not ok)
    return _label(p), report.passed, "all clauses", f"failed {failed}"


def verify_structure_dd(run: RunConfig) -> VerificationReport:
    require(run, "t", "max_weight")
    payloads = [(Family.DD.value, run.t, p) for p in doubled_distinct(run.max_weight)]
    return run_checks(run, structure_check, payloads, "dd_partitions", "DD partitions")


def verify_structure_sc(run: RunConfig) -> VerificationReport:
    require(run, "t", "max_weight")
    payloads = [(Family.SC.value, run.t, p) for p in self_conjugate(run.max_weight)]
    return run_checks(run, structure_check, payloads, "sc_partitions", "SC partitions")


# DD q-analogue at u = q^{t+1} against the type C summand at x_i = q^i


def ladder_check(args) -> Outcome:
    t, core = args
    g = 2 * t + 2
    numerator = (-U) ** durfee(core)
    denominator = LaurentPoly.constant(1)
    for box in boxes(core):
        numerator = numerator * (1 - U ** (-2 * box.eps) * Q ** box.hook)
        denominator = denominator * (1 - Q ** box.hook)
        if box.on_diagonal:
            half = box.hook // 2
            numerator = numerator * (1 + U * Q ** half)
            denominator = denominator * (1 + U ** -1 * Q ** half)
    at_u = {"u": Q ** (t + 1)}
    numerator = numerator.substitute(**at_u)
    denominator = denominator.substitute(**at_u)
    mu = Partition.of(vcoding(core, g, t, Family.DD).mu)
    stats = h_plus_stats(core, g)
    summand = principal_sp(mu, t) * parity_sign(durfee(core) + stats.h_plus)
    return _label(core), numerator == denominator * summand, str(numerator), str(denominator * summand)


def verify_ladder(run: RunConfig) -> VerificationReport:
    cores = _dd_cores(run)
    return run_checks(run, ladder_check, [(run.t, c) for c in cores], "cores", "DD cores")


# Bijections and their inverses


def _is_strict(p: Partition) -> bool:
    return len(set(p.parts)) == p.length


def roundtrip_check(args) -> Outcome:
    t, p = args
    failures = []
    d = decompose(p, t)
    if compose(d) != p:
        failures.append("compose")
    if d.weight != p.weight:
        failures.append("weight")
    if decode(encode(p)) != p:
        failures.append("word")
    if _is_strict(p) and undouble(double(p)) != p:
        failures.append("double")
    if is_doubled_distinct(p) and double(undouble(p)) != p:
        failures.append("undouble")
    return _label(p), not failures, "all roundtrips", f"failed {failures}"


def verify_roundtrip(run: RunConfig) -> VerificationReport:
    require(run, "t", "max_weight")
    payloads = [(run.t, p) for p in partitions(run.max_weight)]
    return run_checks(run, roundtrip_check, payloads, "partitions", "partitions")


# Weight formulas on core vectors and V-codings


def core_weight_check(args) -> Outcome:
    t, core = args
    v = core_vector(core, t)
    ok = weight_from_core_vector(v) == core.weight and core_from_vector(v) == core
    return _label(core), ok, str(core.weight), f"{weight_from_core_vector(v)} from {v.n}"


def verify_core_weights(run: RunConfig) -> VerificationReport:
    require(run, "t", "max_weight")
    cores = t_cores(run.t, run.max_weight)
    return run_checks(run, core_weight_check, [(run.t, c) for c in cores], "cores", "cores")


def reduced_weight_check(args) -> Outcome:
    family, t, core = args
    dd = family == Family.DD.value
    g = 2 * t + 2 if dd else 2 * t
    v = core_vector(core, g)
    try:
        coding = vcoding(core, g, t, Family(family))
        coded = weight_from_vcoding(coding) if dd else sc_weight_from_vcoding(coding)
        back = core_from_vcoding(coding)
    except VCodingError as e:
        return _label(core), False, str(core.weight), f"no coding: {e}"
    reduced = dd_reduced_weight(v) if dd else sc_reduced_weight(v)
    ok = reduced == core.weight and coded == core.weight and back == core
    return _label(core), ok, str(core.weight), f"reduced {reduced}, coded {coded}, decoded ({back})"


def verify_reduced_weights(run: RunConfig) -> VerificationReport:
    require(run, "t", "max_weight")
    t, w = run.t, run.max_weight
    payloads = [(Family.DD.value, t, c) for c in family_cores_by_sieve(Family.DD, 2 * t + 2, w)]
    payloads += [(Family.SC.value, t, c) for c in family_cores_by_sieve(Family.SC, 2 * t, w)]
    return run_checks(run, reduced_weight_check, payloads, "cores", "DD and SC cores")


# Sieve against V-coding generation


def _compare_generators(run: RunConfig, family: Family, g: int) -> VerificationReport:
    report, started = start_report(run)
    sieved = family_cores_by_sieve(family, g, run.max_weight)
    coded = family_cores_by_coding(family, g, run.max_weight)
    for core in sorted(set(sieved) ^ set(coded), key=lambda p: (p.weight, p.parts)):
        side = "sieve only" if core in sieved else "coding only"
        logger.warning(f"{run.identity}: {side} at {_label(core)}")
        report.record(_label(core), side, "present in both")
    if len(coded) != len(set(coded)):
        report.record("coding", f"{len(coded)} cores", f"{len(set(coded))} distinct")
    report.terms_enumerated = {"sieve": len(sieved), "coding": len(coded)}
    return finish_report(report, started)


def verify_generators_dd(run: RunConfig) -> VerificationReport:
    require(run, "t", "max_weight")
    return _compare_generators(run, Family.DD, 2 * run.t + 2)


def verify_generators_sc(run: RunConfig) -> VerificationReport:
    require(run, "t", "max_weight")
    return _compare_generators(run, Family.SC, 2 * run.t)


verify_lemma35 = verify_first_hook
verify_lemma36 = verify_sign_parity
