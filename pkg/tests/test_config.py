import json
from fractions import Fraction

import pytest

from src.core.suite import VerificationSuite, compare_golden, golden_path, params_slug, resolve_run
from src.models.partition import EMPTY, Partition
from src.models.report import VerificationReport
from src.utils.config import WORKERS_ENV, Config
from src.utils.exceptions import BudgetError, ConfigurationError, PartitionError
from src.utils.serialization import (
    dumps,
    parse_cap,
    parse_partition,
    partition_from_json,
    partition_to_json,
)

SMALL_SUITE = """
suite:
  - {identity: "no", T_cap: 3}
  - {identity: nosc, T_cap: "1/2", q_cap: 2}
  - {identity: lemma36, t: 1, max_weight: 8}
"""


@pytest.fixture(autouse=True)
def no_worker_env(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)


def test_defaults():
    config = Config()
    assert config["caps"] == {"T": 6, "q": 8, "weight": 20}
    assert config["parallel"]["workers"] == 1
    assert config["random"]["tau_samples"] == 20
    assert len(config["suite"]) > 0


def test_user_config_is_merged(config_file):
    config = Config(config_file("caps:\n  T: 3\nprogress: false\n"))
    assert config["caps"]["T"] == 3
    assert config["caps"]["q"] == 8
    assert config["progress"] is False


def test_missing_user_config_falls_back(tmp_path):
    assert Config(tmp_path / "absent.yaml")["caps"]["T"] == 6


def test_environment_sets_workers(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert Config()["parallel"]["workers"] == 3
    monkeypatch.setenv(WORKERS_ENV, "many")
    with pytest.raises(ConfigurationError):
        Config()


@pytest.mark.parametrize("text", ["caps:\n  T: -1\n", "parallel:\n  workers: 0\n", "caps: [\n"])
def test_invalid_config(config_file, text):
    with pytest.raises(ConfigurationError):
        Config(config_file(text))


def test_override_and_budget():
    config = Config()
    config.override("parallel", "workers", None)
    assert config["parallel"]["workers"] == 1
    config.override("parallel", "workers", 4)
    assert config["parallel"]["workers"] == 4
    config.check_budget(T_cap=16, q_cap=24, weight=80)
    with pytest.raises(BudgetError):
        config.check_budget(T_cap=17)
    with pytest.raises(BudgetError):
        config.check_budget(weight=81)


def test_parse_partition():
    assert parse_partition("11,6,4") == Partition((11, 6, 4))
    assert parse_partition("") == EMPTY
    assert parse_partition("∅") == EMPTY
    for text in ("3,a", "0", "1,2"):
        with pytest.raises(PartitionError):
            parse_partition(text)


def test_partition_json():
    p = Partition((3, 1))
    assert partition_to_json(p) == [3, 1]
    assert partition_from_json([3, 1]) == p
    with pytest.raises(PartitionError):
        partition_from_json(["x"])


def test_parse_cap():
    assert parse_cap("7/2") == Fraction(7, 2)
    assert parse_cap("4") == 4 and isinstance(parse_cap("4"), int)
    assert parse_cap(Fraction(6, 2)) == 3
    for value in ("x", -1, "1/0"):
        with pytest.raises(ConfigurationError):
            parse_cap(value)


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
    assert json.loads(dumps({"a": "∅"})) == {"a": "∅"}


def test_resolve_run():
    config = Config()
    run = resolve_run(config, "no")
    assert run.T_cap == 6 and run.q_cap is None and run.seed is None
    tau = resolve_run(config, "tau-product", t=1)
    assert (tau.seed, tau.tau_samples, tau.max_weight) == (20240601, 20, 20)
    assert resolve_run(config, "nosc", T_cap="7/2").T_cap == Fraction(7, 2)
    with pytest.raises(ConfigurationError):
        resolve_run(config, "no", T_cap="7/2")
    with pytest.raises(BudgetError):
        resolve_run(config, "no", T_cap=99)


def test_params_slug():
    assert params_slug({"t": 1, "T_cap": "7/2"}) == "t=1,T_cap=7over2"
    assert params_slug({}) == "default"


def test_golden_roundtrip(tmp_path):
    report = VerificationReport("no", {"T_cap": 3}, terms_enumerated={"partitions": 7})
    assert compare_golden(report, tmp_path)
    path = golden_path(tmp_path, report)
    assert path == tmp_path / "no" / "T_cap=3.json"
    assert compare_golden(report, tmp_path)
    report.terms_enumerated = {"partitions": 8}
    assert not compare_golden(report, tmp_path)
    assert compare_golden(report, tmp_path, update=True)


def test_suite_runs_configured_entries(config_file, tmp_path):
    suite = VerificationSuite(Config(config_file(SMALL_SUITE)))
    reports = suite.run_all()
    assert [r.identity for r in reports] == ["no", "nosc", "lemma36"]
    assert suite.passed
    paths = suite.save_reports(tmp_path / "reports")
    assert paths[1].name == "T_cap=1over2,q_cap=2.json"
    assert suite.check_golden(tmp_path / "golden")
    assert suite.check_golden(tmp_path / "golden")


@pytest.mark.parametrize("entry", ["{T_cap: 3}", "{identity: petreolle, T_cap: 3, colour: red}"])
def test_suite_rejects_bad_entries(config_file, entry):
    suite = VerificationSuite(Config(config_file(f"suite:\n  - {entry}\n")))
    with pytest.raises(ConfigurationError):
        suite.runs()
