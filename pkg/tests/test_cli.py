import csv
import io
import json
import re
import subprocess
import sys

import pytest

from rankcrank.cli import run

FLOAT_TOKEN = re.compile(r"\d\.\d|\d[eE][+-]?\d")


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_moments_csv_contains_m2_of_4(capsys):
    code, out, _ = invoke(capsys, "moments", "--kind", "crank", "--k", "1", "--n-max", "10", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,moment"
    assert "4,40" in lines
    assert len(lines) == 12


def test_constants_json_contains_xi2(capsys):
    code, out, _ = invoke(capsys, "constants", "--k-max", "2", "--format", "json")
    assert code == 0
    assert '"xi":"1/6"' in out
    rows = json.loads(out)
    assert [r["k"] for r in rows] == [0, 1, 2]
    assert set(rows[1]) == {"k", "xi", "xi_prime", "xi_tilde", "lambda_tilde", "alpha", "beta_coeff"}
    assert rows[2]["alpha"] == "84/5"


def test_verify_pde_exit_zero(capsys):
    code, out, _ = invoke(capsys, "verify", "pde", "--k-max", "3", "--n-max", "100")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


@pytest.mark.parametrize("suite", ["inequality", "identities", "constants"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = invoke(capsys, "verify", suite, "--n-max", "120", "--k-max", "3")
    assert code == 0, out


def test_verify_convergence(capsys):
    code, out, _ = invoke(capsys, "verify", "convergence", "--kind", "rank", "--k", "2", "--n-list", "100,200,400")
    assert code == 0
    assert len(json.loads(out)["metrics"]) == 3


def test_verify_failure_exits_one(capsys, monkeypatch):
    from rankcrank import cli
    from rankcrank.verify import VerdictReport, Witness

    def failing(args):
        return VerdictReport("forced", {}, "fail", [Witness("here", 1, 2)])

    monkeypatch.setattr(cli, "_run_suite", failing)
    code, out, _ = invoke(capsys, "verify", "constants")
    assert code == 1
    assert json.loads(out)["witnesses"][0]["location"] == "here"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["moments", "--k", "1", "--no-such-flag"],
        ["moments", "--kind", "diff", "--k", "0"],
        ["moments", "--kind", "rank", "--k", "1", "--route", "recurrence"],
        ["predict", "--kind", "diff", "--k", "1", "--n", "10", "--terms", "2"],
        ["predict", "--kind", "crank", "--n", "10", "--n-list", "1,2"],
        ["predict", "--kind", "crank", "--n", "0"],
        ["predict", "--kind", "crank", "--n", "10", "--precision-bits", "32"],
        ["verify", "pde", "--k-max", "0"],
        ["table", "--n-list", "a,b"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 2
    assert "usage:" in err
    assert out == ""


def test_exact_outputs_have_no_floats(capsys):
    for argv in (
        ["moments", "--kind", "rank", "--k", "3", "--n-max", "40", "--format", "json"],
        ["moments", "--kind", "diff", "--k", "2", "--n-max", "40"],
        ["constants", "--k-max", "8", "--format", "csv"],
        ["constants", "--k-max", "8"],
    ):
        code, out, _ = invoke(capsys, *argv)
        assert code == 0
        assert not FLOAT_TOKEN.search(out), argv


def test_predictions_in_scientific_notation(capsys):
    code, out, _ = invoke(capsys, "predict", "--kind", "partition", "--n-list", "10,100", "--precision-bits", "128")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == ["10", "100"]
    assert all(re.fullmatch(r"\d\.\d+e\+\d+", r["value"]) for r in rows)
    # 128 bits carry 38 significant digits
    assert len(rows[1]["value"].split("e")[0].replace(".", "")) == 38


def test_table_csv_schema(capsys):
    code, out, _ = invoke(capsys, "table", "--kind", "crank", "--k", "2", "--n-list", "100,200")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "exact", "pred1", "pred2", "rel_err", "scaled_remainder"]
    assert rows[1][1].isdigit()


def test_output_is_deterministic(capsys, tmp_path):
    argv = ["table", "--kind", "rank", "--k", "1", "--n-list", "100,200", "--format", "json"]
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert run(argv + ["--out", str(first)]) == 0
    assert run(argv + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert capsys.readouterr().out == ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rankcrank", "moments", "--k", "2", "--n-max", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "3,162"
