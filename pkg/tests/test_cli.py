from __future__ import annotations

import json
import subprocess
import sys

import pytest

from factorcrit import harness
from factorcrit.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_c5(capsys):
    code, out, _ = run(capsys, "analyze", "circulant:5:1", "--json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["three_factor_critical"] is False
    assert report["kappa"] == report["lambda"] == 2
    assert report["witnesses"]["three_factor_critical"] == [0, 1, 3]
    assert "timings" not in report


def test_analyze_c7(capsys):
    code, out, _ = run(capsys, "analyze", "circulant:7:1,2")
    report = json.loads(out)
    assert code == EXIT_OK and report["three_factor_critical"] is True and report["kappa"] == 4


def test_analyze_graph6_runs_symmetry_search(capsys):
    code, out, _ = run(capsys, "analyze", "IheA@GUAo")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["transitivity"] == "search" and report["automorphism_group_order"] == 120
    assert report["bicritical"] is True and report["elementary"] is True


def test_analyze_disconnected(capsys):
    code, out, _ = run(capsys, "analyze", "kneser:4:2")
    report = json.loads(out)
    assert code == EXIT_OK and report["connected"] is False and report["lambda2"] == harness.UNDEFINED


def test_analyze_budget_gives_bounds(capsys):
    code, out, _ = run(capsys, "analyze", "kneser:7:3", "--budget", "2000")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["lambda_c"] == harness.CAPPED
    assert any("budget" in note for note in report["notes"])


def test_analyze_timings_flag(capsys):
    _, out, _ = run(capsys, "analyze", "cycle:5", "--timings")
    assert "timings" in json.loads(out)


@pytest.mark.parametrize("bad", ["D~", "circulant:7", "cayley:nope", "xx!", ""])
def test_malformed_input_exit_code(capsys, bad):
    code, out, err = run(capsys, "analyze", bad)
    assert code == EXIT_INPUT and out == "" and err.startswith("error:")


def test_width_cap_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "kneser:9:4")
    assert code == EXIT_CAP and "width" in err


@pytest.mark.parametrize("order", ["4", "3", "14"])
def test_verify_theorem_rejects_bad_orders(capsys, order):
    code, _, _ = run(capsys, "verify-theorem", "--max-order", order)
    assert code == EXIT_INPUT


def test_verify_theorem_order_5(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--max-order", "5")
    report = json.loads(out)
    assert code == EXIT_OK and report["passed"] and report["total"] == 2
    rows = {row["family"]: row for row in report["graphs"]}
    c5, k5 = rows["circulant:5:1"], rows["circulant:5:1,2"]
    assert c5["three_factor_critical"] is False and c5["cycle"] is True
    assert c5["witness"] == [0, 1, 3]
    assert k5["three_factor_critical"] is True


def test_verify_theorem_order_7(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--max-order", "7")
    report = json.loads(out)
    assert code == EXIT_OK and report["violations"] == [] and report["total"] == 5


def test_verify_lemma(capsys):
    code, out, _ = run(capsys, "verify-lemma", "--id", "2.4", "--max-order", "11")
    report = json.loads(out)
    assert code == EXIT_OK and report["ok"] and report["failed"] == 0


def test_verify_lemma_unknown_id(capsys):
    with pytest.raises(SystemExit):
        main(["verify-lemma", "--id", "9.9"])


def test_oracle_check_small(capsys):
    code, out, _ = run(capsys, "oracle-check", "--random", "20", "--no-families")
    report = json.loads(out)
    assert code == EXIT_OK and report["mismatches"] == []


def test_oracle_check_empty_corpus(capsys):
    code, _, _ = run(capsys, "oracle-check", "--random", "0", "--no-families")
    assert code == EXIT_INPUT


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "cycle:5")
    assert code == EXIT_OK and out.strip() == "Dhc"
    code, out, _ = run(capsys, "generate", "cycle:4", "--emit", "edges")
    assert out.split("\n")[:2] == ["4", "0 1"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "factorcrit", "generate", "complete:5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == EXIT_OK and proc.stdout.strip() == "D~{"


def test_violation_exit_code_constant():
    assert EXIT_VIOLATION == 1
