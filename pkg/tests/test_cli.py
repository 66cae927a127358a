import csv
import io
import json
import subprocess
import sys

import pytest

from qtail.cli import run
from qtail.qfun import euler
from qtail.series import TruncatedSeries


def test_tail_json_is_euler_window():
    code, out = run(["tail", "--family", "torus-odd", "--k", "1", "--terms", "30", "--format", "json"])
    assert code == 0
    assert TruncatedSeries.from_json(out) == euler(30)


def test_tail_csv_and_plain():
    code, out = run(["tail", "--family", "lk-product", "--k", "1", "--terms", "5", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["exponent", "coefficient"] and rows[1] == ["0", "1"]
    code, out = run(["tail", "--family", "phi", "--k", "1", "--u", "1", "--terms", "4"])
    assert out.strip() == "1 - 2*q + q^2 + O(q^4)"


def test_verify_lk_forms_and_negative_control():
    assert run(["verify", "--identity", "corollary", "--k", "2", "--terms", "150"])[0] == 0
    code, out = run(["verify", "--identity", "corollary", "--k", "2", "--terms", "150", "--perturb", "--format", "json"])
    assert code == 1 and json.loads(out)["first_mismatch"] == 7


@pytest.mark.parametrize("identity", ["false-theta-chain", "fock2", "and1", "phi-85", "jones-match"])
def test_verify_identities_pass(identity):
    code, out = run(["verify", "--identity", identity, "--terms", "60"])
    assert code == 0, out


def test_verify_routes_reports_printed_bound():
    code, out = run(["verify", "--identity", "routes-lk", "--n", "2", "--k", "2", "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["printed_bound_equal"] is False and data["corrected_bound_equal"] is True


def test_stabilize_subcommand():
    code, out = run(["stabilize", "--family", "phi", "--k", "1", "--u", "1", "--n", "3", "--format", "json"])
    rows = json.loads(out)
    assert code == 0 and [r["n"] for r in rows] == [1, 2, 3]
    assert all(r["agreed_terms"] >= r["n"] for r in rows)


def test_jones_subcommand():
    code, out = run(["jones", "--pretzel", "1,1,1"])
    assert code == 0 and out.strip() == "-q^(-4) + q^(-3) + q^(-1)"
    code, out = run(["jones", "--pd", "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]", "--format", "json"])
    assert TruncatedSeries.from_json(out).coeffs == (1, -1, 1, -1, 1)
    code, out = run(["jones", "--pretzel", "3,2,3", "--family", "phi", "--k", "1", "--u", "1", "--format", "json"])
    assert code == 0 and json.loads(out)["note"] == "head"


def test_skein_coeff_subcommand():
    code, out = run(["skein-coeff", "delta", "2", "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["laurent"] == "q^(-1) + 1 + q"
    code, out = run(["skein-coeff", "gamma", "2", "1", "1", "--method", "assembled", "--format", "json"])
    assert json.loads(out)["value"] == "q^(-3)*(1-q^2)*(1-q^3)^-3*(1-q^4)^-1*(1-q^5)*(1-q^6)^2"
    assert run(["skein-coeff", "E", "2", "1", "0", "--method", "definitional"])[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["tail", "--family", "phi", "--k", "1"],
        ["skein-coeff", "delta", "1", "2"],
        ["skein-coeff", "E", "2"],
        ["jones"],
        ["verify", "--identity", "stabilize"],
        ["tail", "--family", "torus-odd", "--k", "1", "--terms", "0"],
        ["bogus"],
        ["tail", "--family", "nope", "--k", "1"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv)[0] == 2


def test_env_overrides_jobs(monkeypatch):
    monkeypatch.setenv("QTAIL_JOBS", "x")
    assert run(["tail", "--family", "torus-odd", "--k", "1", "--terms", "5"])[0] == 2
    monkeypatch.setenv("QTAIL_JOBS", "2")
    assert run(["tail", "--family", "torus-odd", "--k", "2", "--terms", "40", "--jobs", "1"]) == run(
        ["tail", "--family", "torus-odd", "--k", "2", "--terms", "40"]
    )


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "qtail.cli", "tail", "--family", "torus-odd", "--k", "1", "--terms", "6"],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0 and p.stdout.strip() == "1 - q - q^2 + q^5 + O(q^6)"
