import json
import subprocess
import sys
from pathlib import Path

import pytest

from lambda_local.cli import main

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "gauss_3_1": ["gauss", "--p", "3", "--s", "1"],
    "gauss_3_2": ["gauss", "--p", "3", "--s", "2"],
    "catalog_q2": ["lambda", "catalog", "q2"],
    "classify_q8": ["group", "classify", "--catalog", "Q8"],
    "epsilon_chi7": ["epsilon", "--p", "2", "--chi", "chi7"],
    "dispatch_v5": ["lambda", "dispatch", "--catalog", "V", "--p", "5"],
    "crosscheck_7": ["lambda", "crosscheck", "--p", "7"],
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(capsys, name):
    code, out, _ = run(capsys, *GOLDEN_CASES[name], "--format", "json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_output_is_byte_stable(capsys):
    first = run(capsys, "lambda", "catalog", "q2", "--format", "json")[1]
    second = run(capsys, "lambda", "catalog", "q2", "--format", "json")[1]
    assert first == second


def test_gauss_value(capsys):
    code, data = run_json(capsys, "gauss", "--p", "3", "--s", "1", "--closed")
    assert code == 0 and data["schema"] == 1
    (row,) = data["results"]
    assert row["value"] == "i*sqrt(3)"
    assert row["numeric"][1] == pytest.approx(3 ** 0.5)
    assert set(row) >= {"p", "s", "value", "numeric"}


def test_q2_catalog_table(capsys):
    code, out, _ = run(capsys, "lambda", "catalog", "q2")
    assert code == 0
    lines = out.splitlines()
    borders = [k for k, line in enumerate(lines) if line.startswith("+")]
    first_table = lines[borders[1] + 1 : borders[2]]
    rows = [line for line in first_table if line.startswith("| ")]
    assert len(rows) == 8
    assert rows[-1].split("|")[1].strip() == "product"
    assert " 1 " in rows[-1]


def test_catalog_alias(capsys):
    a = run(capsys, "catalog", "q2", "--format", "json")[1]
    b = run(capsys, "lambda", "catalog", "q2", "--format", "json")[1]
    assert json.loads(a)["results"] == json.loads(b)["results"]
    code, data = run_json(capsys, "catalog", "groups")
    assert code == 0 and len(data["results"]) == 43


def test_group_classify(capsys):
    code, data = run_json(capsys, "group", "classify", "--catalog", "Q8")
    (row,) = data["results"]
    assert row["case"] == "MetacyclicNotCyclic" and row["contains_klein"] is False
    assert row["rk2"] == 2 and row["derived_order"] == 2 and row["delta_trivial"] is True


def test_group_from_file(capsys, tmp_path):
    f = tmp_path / "z2.json"
    f.write_text(json.dumps({"order": 2, "table": [[0, 1], [1, 0]]}))
    code, data = run_json(capsys, "group", "classify", "--in", str(f))
    assert code == 0 and data["results"][0]["case"] == "NontrivialCyclic"


def test_epsilon_record(capsys):
    chi = json.dumps({"a": 2, "on_uniformizer": "+1", "on_units": {"3": "-1", "5": "+1"}})
    code, data = run_json(capsys, "epsilon", "--p", "2", "--chi", chi)
    (row,) = data["results"]
    assert row["value"] == "i" and row["a"] == 2 and row["n_psi"] == 0
    assert row["checks"] == {"functional_eq": True, "unit_modulus": True}
    code, data = run_json(capsys, "epsilon", "--p", "2", "--chi", chi, "--psi-shift", "2")
    assert data["results"][0]["value"] == "i" and data["results"][0]["n_psi"] == 1


def test_every_lambda_record_has_provenance(capsys):
    cases = [
        ["lambda", "unramified", "--p", "3", "--f", "2", "--n-psi", "1"],
        ["lambda", "odd", "--degree", "3"],
        ["lambda", "tame-quad", "--q", "3", "--trace-class", "Square"],
        ["lambda", "klein", "--q", "9"],
        ["lambda", "square-class", "--p", "2"],
        ["lambda", "dispatch", "--catalog", "Z8", "--p", "3"],
        ["lambda", "catalog", "q2"],
    ]
    for argv in cases:
        code, data = run_json(capsys, *argv)
        assert code == 0, argv
        for rec in data["results"]:
            assert rec["provenance_theorem"], argv
            assert "value" in rec


def test_dispatch_symbolic(capsys):
    code, data = run_json(capsys, "lambda", "dispatch", "--catalog", "Z8", "--p", "3")
    assert data["results"][0]["value"] == "W(alpha)"
    assert data["results"][0]["kind"] == "SymbolicWAlpha"


def test_computation_error_exit_1(capsys):
    code, out, err = run(capsys, "lambda", "dispatch", "--catalog", "Z2^3", "--p", "3")
    assert code == 1 and out == ""
    assert err.startswith("error: TameImpossible:")
    code, _, err = run(capsys, "gauss", "--p", "2")
    assert code == 1 and "EvenCharacteristic" in err


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "gauss")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "epsilon", "--p", "2", "--chi", "{not json")[0] == 2
    assert run(capsys, "epsilon", "--p", "2", "--psi-shift", "0", "--chi", "chi1")[0] == 2
    assert run(capsys, "group", "classify", "--in", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert run(capsys, "group", "classify", "--in", str(bad))[0] == 2


def test_verify_scopes(capsys):
    code, data = run_json(capsys, "verify", "lambda")
    assert code == 0
    names = [c["name"] for c in data["checks"]]
    assert any(n.startswith("AC1") for n in names)
    assert "1, i, i, 1, -1, i, -i" in data["checks"][0]["got"]
    code, data = run_json(capsys, "verify", "groups")
    assert code == 0 and data["results"][0]["failed"] == 0
    assert any("Gallagher" in c["name"] for c in data["checks"])


def test_verify_gauss(capsys):
    code, data = run_json(capsys, "verify", "gauss")
    assert code == 0 and data["results"] == [{"scope": "gauss", "checks": 1, "passed": 1, "failed": 0}]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lambda_local", "lambda", "klein", "--q", "5", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["value"] == "-1"
