import json
import subprocess
import sys
from pathlib import Path

import pytest

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "nevlab", *args],
                          capture_output=True, text=True)


def test_bound_csv():
    out = run_cli("bound", "--n", "1", "--d", "1", "--epsilon", "1/2")
    assert out.returncode == 0
    assert "19,20,32" in out.stdout
    assert "closed_form_exceeded" in out.stdout


def test_bound_flag_raised():
    out = run_cli("bound", "--n", "2", "--d", "2", "--epsilon", "1/2", "--out", "json")
    data = json.loads(out.stdout)
    row = data["rows"][0]
    assert row["alpha"] == 444
    assert row["m_exact"] == 99235 and row["m_closed_form"] == 82944
    assert row["closed_form_exceeded"] is True


def test_zeros_command():
    out = run_cli("zeros", "--expr", "1+z+exp(z)", "--radius", "3", "--out", "json")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["meta"]["total_multiplicity"] == 1
    assert abs(data["rows"][0]["re"] + 1.2785) < 1e-3


def test_filtration_command():
    out = run_cli("filtration", "--n", "1", "--d", "1", "--alpha", "3")
    assert out.returncode == 0
    assert "# weighted_delta_sum=6" in out.stdout


def test_filtration_with_gammas_file(tmp_path):
    gfile = tmp_path / "gammas.txt"
    gfile.write_text("x1^2\nx2^2\n")
    out = run_cli("filtration", "--n", "2", "--d", "2", "--alpha", "4",
                  "--gammas", str(gfile))
    assert out.returncode == 0
    assert "# total_dim=15" in out.stdout


def test_smt_scenario_runs():
    out = run_cli("smt", "--scenario", str(SCENARIOS / "smt_five_points.json"))
    assert out.returncode == 0
    assert "# truncation=1" in out.stdout
    lines = [l for l in out.stdout.splitlines() if not l.startswith("#")]
    assert lines[0].startswith("r,T,NM_0")
    assert len(lines) == 4


def test_smt_determinism_across_threads():
    path = str(SCENARIOS / "smt_exp_curve.json")
    a = run_cli("smt", "--scenario", path, "--threads", "1")
    b = run_cli("smt", "--scenario", path, "--threads", "4")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_nevanlinna_command():
    out = run_cli("nevanlinna", "--scenario", str(SCENARIOS / "nevanlinna_exp.json"))
    assert out.returncode == 0
    header = [l for l in out.stdout.splitlines() if l.startswith("r,")][0]
    assert header == "r,T,m_0,n_0,nM_0,N_0,NM_0,m_1,n_1,nM_1,N_1,NM_1"


def test_theorem_r_command():
    out = run_cli("theorem-r", "--scenario", str(SCENARIOS / "theorem_r_exp.json"))
    assert out.returncode == 0
    assert "# wronskian_zeros=0" in out.stdout


def test_lemmas_command_json():
    out = run_cli("lemmas", "--systems", "3", "--zero-polys", "2",
                  "--max-alpha", "5", "--out", "json")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["meta"]["all_passed"] is True


def test_exit_code_2_on_precondition(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "n": 2,
        "curve": ["1", "z", "exp(z)"],
        "targets": [{"form": t, "degree": 1}
                    for t in ("x0", "x1", "x0 + x1", "x2")],
        "epsilon": "1/2",
        "r_grid": [5],
    }))
    out = run_cli("smt", "--scenario", str(bad))
    assert out.returncode == 2
    assert "witness" in out.stderr
    missing = run_cli("smt", "--scenario", str(tmp_path / "nope.json"))
    assert missing.returncode == 2


def test_exit_code_2_on_parse_error():
    out = run_cli("zeros", "--expr", "1 + @", "--radius", "2")
    assert out.returncode == 2
    assert "position" in out.stderr


def test_exit_code_3_on_nonconvergence(tmp_path):
    # the exp-curve characteristic integrand has corners where the max
    # switches branch, so the trapezoid rule cannot reach 1e-14 within the
    # node cap; this must surface as exit code 3, not a hang or a wrong value
    scenario = tmp_path / "s.json"
    scenario.write_text(json.dumps({
        "n": 2,
        "curve": ["1", "z", "exp(z)"],
        "targets": [{"form": t, "degree": 1} for t in ("x0", "x1", "x2")],
        "epsilon": "1/2",
        "r_grid": [5],
    }))
    out = run_cli("smt", "--scenario", str(scenario), "--tol", "1e-14")
    assert out.returncode == 3
    assert "nodes" in out.stderr or "convergence" in out.stderr
