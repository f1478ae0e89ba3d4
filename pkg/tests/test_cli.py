import json
import subprocess
import sys

import pytest

from icosolve.cli import EXAMPLE_VALUES, canonical_json, main

from conftest import EXAMPLE_J, EXAMPLE_ROOTS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def as_complex(obj):
    return complex(obj["re"], obj["im"])


def test_solve_example_with_intermediates(capsys):
    code, out, _ = run(capsys, "solve", "--alpha", "i", "--beta", "-2.4", "--gamma", "1-i", "--intermediates")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "icosolve/1"
    assert abs(as_complex(report["J"]) - EXAMPLE_J) < 1e-4
    roots = [as_complex(r) for r in report["intermediates"]["roots_by_nu"]]
    assert max(abs(a - b) for a, b in zip(roots, EXAMPLE_ROOTS)) < 1e-5
    inter = report["intermediates"]
    for key in ("r", "s", "p", "q", "h1", "h2", "J", "Y", "f_Y", "t_nu", "branch_log"):
        assert key in inter
    assert len(inter["t_nu"]) == 5


def test_solve_oracle_check(capsys):
    code, out, _ = run(capsys, "solve", "--alpha", "i", "--beta", "-2.4", "--gamma", "1-i", "--oracle-check")
    assert code == 0
    assert json.loads(out)["oracle_max_distance"] < 1e-6


def test_zero_quintic_is_usage_error(capsys):
    code, _, err = run(capsys, "solve", "--alpha", "0", "--beta", "0", "--gamma", "0")
    assert code == 2
    assert "zero quintic" in err


def test_math_failure_emits_error_object(capsys):
    code, out, _ = run(capsys, "solve", "--alpha", "1", "--beta", "1", "--gamma", "0")
    assert code == 1
    report = json.loads(out)
    assert report["ok"] is False
    assert report["error"]["type"] == "DegenerateCoefficients"


def test_unknown_flag_and_bad_literal(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve", "--alpha", "1", "--beta", "1", "--gamma", "1", "--bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["solve", "--alpha", "1+", "--beta", "1", "--gamma", "1"])
    assert info.value.code == 2
    assert "column" in capsys.readouterr().err


def test_json_round_trip_is_byte_identical(capsys):
    _, out, _ = run(capsys, "solve", "--alpha", "i", "--beta", "-2.4", "--gamma", "1-i", "--intermediates")
    text = out.strip()
    assert canonical_json(json.loads(text)) == text


def test_canonical_float_formatting():
    assert canonical_json({"b": 1.0, "a": 0.1, "c": [2.5e-30, 1e22]}) == (
        '{"a": 0.10000000000000001, "b": 1.0, "c": [2.4999999999999999e-30, 1e+22]}'
    )
    assert canonical_json({"z": 1 - 2j}) == '{"z": {"im": -2.0, "re": 1.0}}'


def test_solve_general(capsys):
    code, out, _ = run(capsys, "solve-general", "--c4", "1", "--c3", "2", "--c2", "3", "--c1", "4", "--c0", "5",
                       "--oracle-check", "--intermediates")
    assert code == 0
    report = json.loads(out)
    assert report["oracle_max_distance"] < 1e-6
    assert "reduction" in report["intermediates"]


def test_solve_general_all_zero_is_usage_error(capsys):
    code, _, _ = run(capsys, "solve-general")
    assert code == 2


def test_check_invariants_default_and_determinism(capsys):
    code, first, _ = run(capsys, "check-invariants", "--seed", "7")
    assert code == 0
    _, second, _ = run(capsys, "check-invariants", "--seed", "7")
    assert first == second
    report = json.loads(first)
    assert all(s["passed"] for s in report["suites"])
    syzygy = next(s for s in report["suites"] if s["name"] == "syzygy")
    assert syzygy["worst"] < 1e-10


def test_check_invariants_reduced(capsys):
    code, out, _ = run(capsys, "check-invariants", "--points", "10")
    assert code == 0
    assert all(s["points"] == 10 for s in json.loads(out)["suites"])


def test_eval_2f1(capsys):
    code, out, _ = run(capsys, "eval-2f1", "--a", "1", "--b", "1", "--cc", "2", "--z", "0.5")
    assert code == 0
    report = json.loads(out)
    assert abs(as_complex(report["value"]) - 1.3862943611198797) < 1e-13
    assert report["method"] == "direct"


def test_example_matches_all_published_values(capsys):
    code, out, _ = run(capsys, "example")
    assert code == 0
    report = json.loads(out)
    assert report["matched"] == report["compared"] == len(EXAMPLE_VALUES) == 17


def test_example_text_table(capsys):
    code, out, _ = run(capsys, "example", "--format", "text")
    assert code == 0
    assert out.strip().endswith("17/17 values within 0.0001")


def test_example_forced_failure(capsys):
    code, out, _ = run(capsys, "example", "--tol", "1e-20")
    assert code == 1
    error = json.loads(out)["error"]
    assert error["type"] == "BranchSelectionFailed"
    assert len(error["attempts"]) == 4


def test_env_tolerance_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("ICOSOLVE_RESIDUAL_TOL", "1e-20")
    code, _, _ = run(capsys, "example")
    assert code == 1
    code, _, _ = run(capsys, "example", "--tol", "1e-8")
    assert code == 0
    monkeypatch.setenv("ICOSOLVE_RESIDUAL_TOL", "banana")
    code, _, err = run(capsys, "example")
    assert code == 2


def test_text_format(capsys):
    code, out, _ = run(capsys, "solve", "--alpha", "i", "--beta", "-2.4", "--gamma", "1-i", "--format", "text")
    assert code == 0
    assert "roots[0]:" in out and "schema: icosolve/1" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "icosolve", "eval-2f1", "--a", "1", "--b", "1", "--cc", "2", "--z", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == {"im": 0.0, "re": 1.0}
