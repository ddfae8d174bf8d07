import subprocess
import sys
from functools import wraps
from pathlib import Path

import click

from src.core import littlewood
from src.core.enumeration import FAMILIES, enumerate_family
from src.core.identities import run_identity
from src.core.suite import compare_golden, resolve_run
from src.core.vcoding import (
    beta_vector,
    core_from_vcoding,
    sc_weight_from_vcoding,
    vcoding,
    weight_from_vcoding,
)
from src.core.words import encode as encode_word
from src.models.cores import Family
from src.utils.config import Config
from src.utils.exceptions import ConfigurationError, HookIdentitiesError
from src.utils.logging_setup import configure_loggers
from src.utils.serialization import dumps, format_partition, parse_cap, parse_partition

PASS_EXIT, FAIL_EXIT, ERROR_EXIT = 0, 1, 2


class CapType(click.ParamType):
    """Integer or half-integer cap such as ``7/2``."""

    name = "cap"

    def convert(self, value, param, ctx):
        try:
            return parse_cap(value)
        except ConfigurationError as e:
            self.fail(str(e), param, ctx)


def reports_errors(command):
    """Turn package errors into a JSON error object and exit code 2."""

    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except HookIdentitiesError as e:
            click.echo(dumps({"error": type(e).__name__, "message": str(e)}))
            sys.exit(ERROR_EXIT)

    return wrapper


def emit(data, as_text: bool) -> None:
    if not as_text:
        click.echo(dumps(data))
    elif isinstance(data, dict):
        for key, value in data.items():
            click.echo(f"{key}: {value}")
    else:
        for item in data:
            click.echo(item)


def load_config(path, workers=None) -> Config:
    config = Config(path)
    config.override("parallel", "workers", workers)
    logging_config = config.get("logging") or {}
    configure_loggers(logging_config.get("level", "INFO"), logging_config.get("file"))
    return config


output_option = click.option("--json/--text", "as_json", default=True, help="Output format")
config_option = click.option(
    "--config", type=Path, default="config.yaml", help="Path to config file"
)


@click.group()
def cli():
    """Hook-length identities: partition combinatorics and series verification"""
    pass


# Partition queries


@cli.command()
@click.argument("partition")
@click.option("--t", "t", type=int, required=True, help="Modulus of the decomposition")
@output_option
@reports_errors
def decompose(partition, t, as_json):
    """Littlewood decomposition: core, quotient and core vector"""
    p = parse_partition(partition)
    d = littlewood.decompose(p, t)
    vector = littlewood.core_vector(d.core, t)
    emit(
        {
            "core": format_partition(d.core),
            "quotient": [format_partition(nu) for nu in d.quotient],
            "vector": list(vector.n),
            "weights": {
                "partition": p.weight,
                "core": d.core.weight,
                "quotient": sum(nu.weight for nu in d.quotient),
                "vector": littlewood.weight_from_core_vector(vector),
            },
        },
        not as_json,
    )


@cli.command()
@click.argument("partition")
@click.option("--t", "t", type=int, required=True)
@output_option
@reports_errors
def core(partition, t, as_json):
    """The t-core of a partition"""
    p = littlewood.core(parse_partition(partition), t)
    emit({"core": format_partition(p), "weight": p.weight}, not as_json)


@cli.command()
@click.argument("partition")
@click.option("--t", "t", type=int, required=True)
@output_option
@reports_errors
def quotient(partition, t, as_json):
    """The t-quotient of a partition"""
    parts = littlewood.quotient(parse_partition(partition), t)
    emit({"quotient": [format_partition(nu) for nu in parts]}, not as_json)


@cli.command()
@click.argument("partition")
@click.option("--t", "t", type=int, required=True)
@output_option
@reports_errors
def vector(partition, t, as_json):
    """Core vector of the t-core of a partition"""
    p = littlewood.core(parse_partition(partition), t)
    v = littlewood.core_vector(p, t)
    emit(
        {"vector": list(v.n), "weight": littlewood.weight_from_core_vector(v)},
        not as_json,
    )


@cli.command()
@click.argument("partition")
@click.option("--lo", type=int, default=None, help="First index of the window")
@click.option("--hi", type=int, default=None, help="End of the window (exclusive)")
@output_option
@reports_errors
def encode(partition, lo, hi, as_json):
    """Boundary word of a partition"""
    word = encode_word(parse_partition(partition))
    emit(
        {
            "floor": word.floor,
            "zeros": sorted(word.zeros),
            "charge": word.charge,
            "window": word.render(lo, hi),
        },
        not as_json,
    )


@cli.command(name="vcoding")
@click.argument("partition")
@click.option("--g", "g", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--family", type=click.Choice([f.value for f in Family]), required=True)
@output_option
@reports_errors
def vcoding_command(partition, g, t, family, as_json):
    """V-coding of a DD or SC core"""
    p = parse_partition(partition)
    coding = vcoding(p, g, t, Family(family))
    if coding.family is Family.DD:
        weight = weight_from_vcoding(coding)
    else:
        weight = sc_weight_from_vcoding(coding)
    emit(
        {
            "beta": list(beta_vector(p, g)),
            "v": list(coding.v),
            "r": list(coding.r),
            "mu": list(coding.mu),
            "weight_check": weight == p.weight,
            "core_check": core_from_vcoding(coding) == p,
        },
        not as_json,
    )


@cli.command(name="enumerate")
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--max", "max_weight", type=int, required=True, help="Largest weight")
@click.option("--g", "g", type=int, default=None, help="Modulus for the core families")
@output_option
@reports_errors
def enumerate_command(family, max_weight, g, as_json):
    """List a family of partitions in canonical order"""
    found = [format_partition(p) for p in enumerate_family(family, max_weight, g)]
    emit(found, not as_json)


# Verification


def verification_options(command):
    options = [
        click.argument("identity"),
        click.option("--t", "t", type=int, default=None, help="Rank / half modulus"),
        click.option("--T-cap", "T_cap", type=CapType(), default=None, help="Power of T, e.g. 6 or 7/2"),
        click.option("--q-cap", "q_cap", type=int, default=None, help="Power of q"),
        click.option("--max-weight", type=int, default=None, help="Largest core weight"),
        click.option("--seed", type=int, default=None, help="Seed for random tau maps"),
        click.option("--workers", type=int, default=None, help="Worker processes"),
        click.option("--printed", is_flag=True, help="Use the uncorrected product forms"),
        config_option,
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _run(config: Config, identity, **flags):
    return run_identity(resolve_run(config, identity, **flags))


@cli.command()
@verification_options
@click.option("--timings", is_flag=True, help="Include elapsed seconds in the report")
@output_option
@reports_errors
def verify(identity, config, workers, timings, as_json, **flags):
    """Expand both sides of an identity and compare them"""
    report = _run(load_config(config, workers), identity, **flags)
    data = report.to_dict(timings)
    if as_json:
        click.echo(dumps(data))
    else:
        click.echo(f"{report.identity}: {report.status} {report.params}")
        if report.first_mismatch:
            at = report.first_mismatch
            click.echo(f"  first mismatch at {at['at']} ({report.mismatches} total)")
            click.echo(f"  lhs: {at['lhs']}")
            click.echo(f"  rhs: {at['rhs']}")
        click.echo(f"  enumerated: {report.terms_enumerated}")
    sys.exit(PASS_EXIT if report.passed else FAIL_EXIT)


@cli.command()
@verification_options
@click.option("--update", is_flag=True, help="Rewrite the golden file")
@reports_errors
def golden(identity, config, workers, update, **flags):
    """Compare a verification report with golden/<identity>/<params>.json"""
    config = load_config(config, workers)
    report = _run(config, identity, **flags)
    golden_dir = Path((config.get("output") or {}).get("golden_dir", "golden"))
    same = compare_golden(report, golden_dir, update)
    click.echo(dumps({"identity": identity, "status": report.status, "golden_match": same}))
    sys.exit(PASS_EXIT if same and report.passed else FAIL_EXIT)


@cli.command()
@config_option
@click.option("--check-golden", is_flag=True, help="Compare reports with the golden files")
@click.option("--update-golden", is_flag=True, help="Rewrite the golden files")
def run(config, check_golden, update_golden):
    """Run the verification suite from the config"""
    cmd = [sys.executable, str(Path(__file__).with_name("run_suite.py"))]
    if config:
        cmd.extend(["--config", str(config)])
    if check_golden:
        cmd.append("--check-golden")
    if update_golden:
        cmd.append("--update-golden")
    sys.exit(subprocess.call(cmd))


# Development


@cli.command()
def test():
    """Run tests"""
    subprocess.check_call([sys.executable, "-m", "pytest", "tests/", "-v"])


@cli.command()
def lint():
    """Run linters"""
    subprocess.check_call(["flake8", "src/", "scripts/", "tests/"])
    subprocess.check_call(["black", "--check", "src/", "scripts/", "tests/"])


@cli.command()
def format():
    """Format code with black"""
    subprocess.check_call(["black", "src/", "scripts/", "tests/"])


if __name__ == "__main__":
    cli()
