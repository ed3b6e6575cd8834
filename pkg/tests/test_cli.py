import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from binomial_companion import checks
from binomial_companion.cli import REPORT_CSV_COLUMNS, run

REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "n_min", "n_max", "records", "pass"],
    "properties": {
        "version": {"type": "string"},
        "n_min": {"type": "integer"},
        "n_max": {"type": "integer"},
        "pass": {"type": "boolean"},
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "colength", "checks", "group_order", "invariant_factors",
                             "snf", "variety_count", "aut_order"],
                "properties": {
                    "n": {"type": "integer", "minimum": 3},
                    "colength": {"type": "integer"},
                    "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
                    "group_order": {"type": "integer"},
                    "invariant_factors": {"type": "array", "items": {"type": "integer"}},
                    "snf": {"type": "array", "items": {"type": "integer"}},
                    "variety_count": {"type": "integer"},
                    "aut_order": {"type": "string", "pattern": "^[0-9]+$"},
                },
            },
        },
    },
}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_usage_error_exit_2():
    code, _, err = call("basis", "--n", "99", "--bogus")
    assert code == 2 and "bogus" in err


@pytest.mark.parametrize("argv", [
    ["basis", "--n", "2"],
    ["basis", "--n", "5", "--order", "example"],
    ["companion", "--n", "3", "--var", "4"],
    ["companion", "--n", "3", "--format", "cycles"],
    ["aut", "--table", "5..3"],
    ["aut", "--table", "x"],
    ["groebner", "--n", "8", "--from-scratch"],
    ["group", "--n", "11", "--closure"],
    [],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_verify_all_n3():
    code, out, _ = call("verify", "--n", "3", "--all")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(checks.CHECKS)
    assert all(line.startswith("PASS") for line in lines)


def test_verify_skips_beyond_limits():
    code, out, _ = call("verify", "--n", "11", "--group", "--max-n-closure", "10")
    assert code == 0
    assert "SKIP closure" in out and "PASS aut" in out


def test_verify_failure_exit_1(monkeypatch):
    monkeypatch.setitem(checks.CHECKS, "derangement", (lambda n, cache: False, None))
    code, out, err = call("verify", "--n", "4", "--derangement")
    assert code == 1
    assert "FAIL derangement" in out
    assert checks.CLAIM_TAGS["derangement"] in err


def test_ideal_gens():
    code, out, _ = call("ideal", "gens", "--n", "3")
    assert code == 0 and out.splitlines() == ["-x1 + x2*x3", "x1*x3 - x2", "x1*x2 - x3"]
    code, out, _ = call("ideal", "gens", "--n", "4", "--json")
    assert json.loads(out)["colength"] == 17


def test_groebner_from_scratch_equals_explicit_set():
    _, a, _ = call("groebner", "--n", "4")
    _, b, _ = call("groebner", "--n", "4", "--from-scratch")
    assert set(a.splitlines()) == set(b.splitlines())


def test_basis_outputs():
    _, out, _ = call("basis", "--n", "3", "--order", "example")
    assert out.split() == ["1", "x3", "x2", "x2*x3", "x3^2"]
    _, out, _ = call("basis", "--n", "4", "--format", "json")
    data = json.loads(out)
    assert data["order"] == "canonical" and len(data["monomials"]) == 17


def test_companion_formats():
    _, out, _ = call("companion", "--n", "3", "--var", "1", "--order", "example")
    assert out.splitlines()[0] == "0 0 0 1 0"
    _, out, _ = call("companion", "--n", "3", "--var", "2", "--reduced", "--format", "cycles", "--order", "example")
    assert out.strip() == "(1 3)(2 4)"
    _, out, _ = call("companion", "--n", "3", "--var", "3", "--reduced", "--format", "oneline", "--order", "example")
    assert out.strip() == "4 3 2 1"
    _, out, _ = call("companion", "--n", "4", "--reduced", "--format", "json")
    data = json.loads(out)
    assert len(data["matrices"]) == 4
    assert all(m["cycle_type"] == [[4, 4]] for m in data["matrices"])


def test_group_closure():
    code, out, _ = call("group", "--n", "4", "--closure")
    assert code == 0
    assert "closure order: 16" in out and "[2, 2, 4]" in out


def test_aut_table():
    code, out, _ = call("aut", "--table", "3..10")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 8
    assert lines[-1].endswith("2803925657432463350169600")
    code, out, _ = call("aut", "--n", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "group", "aut_structure", "aut_order"] and rows[1][3] == "192"


def test_lattice_commands():
    code, out, _ = call("lattice", "snf", "--n", "6", "--transforms")
    data = json.loads(out)
    assert data["S"] == [1, 2, 2, 2, 2, 8] and "U" in data and "V" in data
    _, out, _ = call("lattice", "variety", "--n", "5")
    assert out.strip() == "48"
    _, out, _ = call("lattice", "variety", "--n", "3", "--list")
    assert sorted(map(tuple, json.loads(out)["points"])) == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    code, out, _ = call("lattice", "verify", "--n", "4")
    assert code == 0 and "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["companion", "--n", "5", "--format", "json"],
    ["verify", "--n", "4", "--all"],
    ["lattice", "snf", "--n", "7", "--transforms"],
    ["aut", "--table", "3..6"],
])
def test_deterministic_output(argv):
    assert call(*argv) == call(*argv)


def test_report_json(tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = call("report", "--n-min", "3", "--n-max", "5", "--out", str(path), "--timing")
    assert code == 0
    data = json.loads(path.read_text())
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["pass"] is True
    assert [r["n"] for r in data["records"]] == [3, 4, 5]
    assert data["records"][1]["invariant_factors"] == [2, 2, 4]
    assert data["records"][2]["aut_order"] == "40320"


def test_report_csv(tmp_path):
    path = tmp_path / "r.csv"
    code, _, _ = call("report", "--n-min", "3", "--n-max", "4", "--out", str(path), "--format", "csv")
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == REPORT_CSV_COLUMNS
    assert rows[2][0] == "4" and rows[2][-1] == "True"


def test_report_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    call("report", "--n-min", "3", "--n-max", "4", "--out", str(a))
    call("report", "--n-min", "3", "--n-max", "4", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "binomial_companion", "aut", "--n", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("40320")
