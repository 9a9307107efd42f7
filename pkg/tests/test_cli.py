import io
import json
import subprocess
import sys

import pytest

from mirror_quadric.cli import main
from mirror_quadric.suites import Check, run_suite


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_gw():
    assert run("gw", "--quadric", "3", "--degree", "1") == (0, "2\n", "")
    assert run("gw", "--quadric", "5", "--degree", "2")[1] == "3/16\n"


def test_series_three_columns():
    code, out, _ = run("series", "--quadric", "3", "--order", "2", "--component", "0", "--route", "all")
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert rows[0] == ["class", "k", "hbar^", "closed", "recursion", "constant-term"]
    assert [r[3:] for r in rows[1:]] == [["1"] * 3, ["2"] * 3, ["3/4"] * 3]


def test_series_csv_and_single_route():
    code, out, _ = run("series", "--quadric", "4", "--order", "1", "--component", "mid", "--route", "closed", "--csv")
    assert code == 0
    assert out.splitlines() == ["N,class,k,route,value,hbar_exponent", "4,s2',0,closed,0,-2", "4,s2',1,closed,1,2"]


def test_superpotential_json():
    code, out, _ = run("superpotential", "--quadric", "4", "--model", "givental", "--json")
    data = json.loads(out)
    assert code == 0 and data["name"] == "givental" and data["N"] == 4


def test_quiver_dot():
    code, out, _ = run("quiver", "--quadric", "5", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_critical_json():
    code, out, _ = run("critical", "--quadric", "4", "--json")
    assert code == 0 and json.loads(out)["count"] == 6


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["gw", "--quadric", "2", "--degree", "1"],
        ["gw", "--quadric", "3", "--degree", "0"],
        ["series", "--quadric", "3"],
        ["series", "--quadric", "5", "--order", "1", "--component", "mid"],
        ["superpotential", "--quadric", "4", "--model", "nope"],
        ["verify", "--quadric", "4", "--suite", "nope"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and "error" in err


def test_verify_all_q4_passes_and_is_deterministic():
    code, out, _ = run("verify", "--quadric", "4", "--suite", "all")
    assert code == 0
    assert out.startswith("seed: 20240607\n")
    assert "NOTE printed coefficients" in out
    assert run("verify", "--quadric", "4", "--suite", "all")[1] == out


def test_verify_seed_is_echoed():
    code, out, _ = run("verify", "--quadric", "5", "--suite", "dmodule", "--seed", "7")
    assert code == 0 and out.startswith("seed: 7\n")


def test_verify_failure_exit_code(monkeypatch):
    import mirror_quadric.suites as suites

    def broken(N, seed):
        yield Check("cluster", "forced", False, "counterexample x = 1")

    monkeypatch.setitem(suites.RUNNERS, "cluster", broken)
    code, out, _ = run("verify", "--quadric", "4", "--suite", "cluster")
    assert code == 1
    assert "first counterexample: cluster: forced: counterexample x = 1" in out


@pytest.mark.parametrize("N", [3, 5, 6])
def test_suites_pass(N):
    assert all(c.ok for c in run_suite(N, "all"))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mirror_quadric", "gw", "--quadric", "4", "--degree", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "2\n"
