import json
import subprocess
import sys

import pytest

from heapcrys.cli import RunConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_heap_dot_nodes(capsys, tmp_path):
    out = tmp_path / "h.dot"
    code, _ = run(capsys, "heap", "dot", "--type", "A4", "--word", "3,4,2,3,1,2",
                  "--out", str(out), "--no-timing")
    assert code == 0
    text = out.read_text()
    assert text.startswith("digraph") and text.count("[label=") == 6


def test_gravsort_cardinality(capsys):
    code, cap = run(capsys, "crystal", "verify-gravsort", "--type", "A3", "--J", "1,3", "--n", "2")
    rep = json.loads(cap.out)
    assert code == 0 and rep["status"] == "PASS"
    assert rep["demazure_size"] == rep["chain_count"] == 20


def test_refused_module_is_error(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, cap = run(capsys, "module", "build", "--type", "D4", "--word", "2,1,3,4,2",
                    "--report", str(path))
    assert code == 2
    rep = json.loads(path.read_text())
    assert rep["status"] == "ERROR" and "dominant minuscule" in rep["error"]
    assert json.loads(cap.out) == rep


def test_usage_errors(capsys):
    assert run(capsys, "heap", "build", "--type", "A3", "--word", "1", "--J", "2")[0] == 2
    assert run(capsys, "heap", "build", "--type", "A3", "--word", "1", "--n", "0")[0] == 2
    assert run(capsys, "heap", "frobnicate")[0] == 2


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("A3", word=(1,), J=(2,))
    with pytest.raises(UsageError):
        RunConfig(None, word=(1,)).resolve()
    with pytest.raises(UsageError):
        RunConfig("A3").resolve()
    d, word, lam = RunConfig("A3", J=(1, 3)).resolve()
    assert sorted(word) == [1, 2, 2, 3]
    assert lam == (0, 1, 0)


def test_no_timing_is_byte_identical():
    argv = [sys.executable, "-m", "heapcrys", "grassmannian", "verify", "--type", "A3",
            "--word", "2,3,1,2", "--n", "2", "--seeds", "2", "--seed", "7", "--no-timing"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and b'"runtime_ms": 0' in a


def test_toggle_identity(capsys):
    code, cap = run(capsys, "toggles", "check", "--type", "D4", "--weight", "w1", "--n", "2",
                    "--identity", "t4 t2 t4 t2 t4 = s2", "--strict")
    assert code == 0
    assert json.loads(cap.out)["identities"][0]["status"] == "EQUAL"


def test_strict_unequal_fails(capsys):
    code, _ = run(capsys, "toggles", "check", "--type", "D4", "--weight", "w1", "--n", "2",
                  "--lhs", "t1", "--rhs", "s1", "--strict")
    assert code == 1


def test_suite_small(capsys):
    code, cap = run(capsys, "suite", "all", "--bound", "small", "--only", "2,3,6,10", "--no-timing")
    rep = json.loads(cap.out)
    assert code == 0
    assert [c["criterion_id"] for c in rep["criteria"]] == [2, 3, 6, 10]
    assert all(c["status"] == "PASS" for c in rep["criteria"])
