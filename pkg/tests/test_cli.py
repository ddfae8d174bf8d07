import json

import pytest
from click.testing import CliRunner

from scripts.cli import cli


QUIET = "progress: false\nlogging:\n  level: WARNING\n"


@pytest.fixture
def invoke(tmp_path):
    """Run the CLI in a scratch directory holding a quiet config.yaml."""
    runner = CliRunner()
    with runner.isolated_filesystem(temp_dir=tmp_path):
        with open("config.yaml", "w") as f:
            f.write(QUIET)
        yield lambda *args: runner.invoke(cli, list(args))


def as_json(result):
    return json.loads(result.output)


def test_decompose_worked_example(invoke):
    result = invoke("decompose", "4,4,3,2", "--t", "3")
    assert result.exit_code == 0
    data = as_json(result)
    assert data["core"] == "1"
    assert data["quotient"] == ["1,1", "", "2"]
    assert data["weights"]["partition"] == 13


def test_decompose_empty(invoke):
    data = as_json(invoke("decompose", "", "--t", "5"))
    assert data["core"] == ""
    assert data["quotient"] == [""] * 5
    assert data["vector"] == [0] * 5


def test_fig2_vector(invoke):
    data = as_json(invoke("decompose", "11,6,4,2,2,1,1,1,1,1", "--t", "6"))
    assert data["vector"] == [0, 1, -2, 0, 2, -1]
    data = as_json(invoke("vector", "11,6,4,2,2,1,1,1,1,1", "--t", "6"))
    assert data == {"vector": [0, 1, -2, 0, 2, -1], "weight": 30}


def test_core_and_quotient(invoke):
    assert as_json(invoke("core", "4,4,3,2", "--t", "3")) == {"core": "1", "weight": 1}
    assert as_json(invoke("quotient", "4,4,3,2", "--t", "3")) == {"quotient": ["1,1", "", "2"]}


def test_text_output(invoke):
    result = invoke("core", "4,4,3,2", "--t", "3", "--text")
    assert result.output.splitlines() == ["core: 1", "weight: 1"]


def test_encode(invoke):
    data = as_json(invoke("encode", "2,1"))
    assert data["floor"] == -2
    assert data["zeros"] == [-1, 1]
    assert data["charge"] == 0


def test_vcoding(invoke):
    data = as_json(invoke("vcoding", "11,6,4,2,2,1,1,1,1,1", "--g", "6", "--t", "2", "--family", "dd"))
    assert data["v"] == [16, 7]
    assert data["mu"] == [11, 3]
    assert data["weight_check"] is True
    assert data["core_check"] is True
    assert as_json(invoke("vcoding", "", "--g", "4", "--t", "1", "--family", "dd"))["v"] == [3]


def test_errors_are_structured(invoke):
    result = invoke("vcoding", "1", "--g", "4", "--t", "1", "--family", "dd")
    assert result.exit_code == 2
    assert as_json(result)["error"] == "VCodingError"
    result = invoke("decompose", "1,x", "--t", "2")
    assert result.exit_code == 2
    assert as_json(result)["error"] == "PartitionError"


def test_enumerate(invoke):
    assert as_json(invoke("enumerate", "p", "--max", "0")) == [""]
    assert as_json(invoke("enumerate", "sc", "--max", "4")) == ["", "1", "2,1", "2,2"]
    assert "11,6,4,2,2,1,1,1,1,1" in as_json(invoke("enumerate", "dd-core", "--g", "6", "--max", "30"))


def test_verify_pass(invoke):
    result = invoke("verify", "no", "--T-cap", "4")
    assert result.exit_code == 0
    report = as_json(result)
    assert report["status"] == "pass"
    assert report["params"] == {"T_cap": 4}
    assert "elapsed" not in report


def test_verify_fail_exit_code(invoke):
    result = invoke("verify", "noc", "--T-cap", "1", "--q-cap", "1", "--printed")
    assert result.exit_code == 1
    assert as_json(result)["first_mismatch"]["at"] == "T^1 q^0"


def test_verify_half_integer_cap(invoke):
    result = invoke("verify", "thm12", "--t", "1", "--T-cap", "3/2", "--timings")
    assert result.exit_code == 0
    report = as_json(result)
    assert report["params"]["T_cap"] == "3/2"
    assert "elapsed" in report


def test_verify_text(invoke):
    result = invoke("verify", "lemma36", "--t", "1", "--max-weight", "8", "--text")
    assert result.exit_code == 0
    assert result.output.startswith("lemma36: pass")


def test_verify_usage_errors(invoke):
    unknown = invoke("verify", "eq99")
    assert unknown.exit_code == 2
    assert as_json(unknown)["error"] == "UnknownIdentityError"
    budget = invoke("verify", "no", "--T-cap", "99")
    assert budget.exit_code == 2
    assert as_json(budget)["error"] == "BudgetError"
    assert invoke("verify", "no", "--T-cap", "x").exit_code == 2


def test_golden(invoke):
    first = invoke("golden", "petreolle", "--T-cap", "3")
    assert first.exit_code == 0
    with open("golden/petreolle/T_cap=3.json") as f:
        assert json.load(f)["status"] == "pass"
    again = invoke("golden", "petreolle", "--T-cap", "3")
    assert as_json(again)["golden_match"] is True
