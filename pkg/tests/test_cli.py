import io
import json
import os
import subprocess
import sys

import pytest

from qgroupoid.cli import main, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_verify_su3_passes():
    code, text = call("verify", "--n", "3", "--steps", "4", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["schema"] == 1 and data["status"] == "pass"
    assoc = next(a for a in data["axioms"] if a["axiom"] == "associativity")
    assert assoc["instances"] == 19683
    assert {t["relation"] for t in data["tl"]} == {"TL1", "TL2", "TL3", "TL4"}


def test_verify_single_axiom_markdown():
    code, text = call("verify", "--n", "3", "--axiom", "unit")
    assert code == 0 and "| unit | pass | 54 |" in text and "overall: pass" in text


def test_documented_hammaoui_failure_exits_zero():
    code, text = call("verify", "--n", "3", "--axiom", "associativity", "--variant", "hammaoui",
                      "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["status"] == "expected-fail"
    assert data["axioms"][0]["witness"]["inputs"] == ["x_0⊗x_0", "y_0⊗y_0", "y_2⊗y_2"]


def test_full_hammaoui_run_reports_unexpected_failures():
    code, text = call("verify", "--n", "3", "--variant", "hammaoui", "--format", "json")
    data = json.loads(text)
    failed = {a["axiom"] for a in data["axioms"] if a["status"] == "fail"}
    assert code == 1 and data["status"] == "fail"
    assert failed == {"associativity", "counit-multiplicativity", "counit-positivity", "antipode-exchange"}


@pytest.mark.parametrize("argv", [
    ["verify", "--n", "1"],
    ["verify", "--n", "4", "--variant", "hammaoui", "--axiom", "unit"],
    ["verify", "--n", "3", "--axiom", "bogus"],
    ["decompose", "--n", "3", "--path", "0,0"],
])
def test_domain_errors_exit_one(argv):
    code, text = call(*argv)
    assert code == 1
    err = json.loads(text)
    assert err["schema"] == 1 and set(err["error"]) == {"type", "message"}


@pytest.mark.parametrize("argv", [
    ["verify", "--n", "3", "--steps", "-1"],
    ["table", "--n", "3", "--format", "html"],
    ["tl", "--n", "3"],
    [],
])
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2


def test_table_and_decompose():
    code, text = call("table", "--n", "3", "--format", "markdown")
    assert code == 0 and "\\delta_{(l+1)i}" in text and "3̄" in text
    code, text = call("decompose", "--n", "3", "--path", "0,1,2", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["terms"] == [{"word": ["T"], "essential": data["terms"][0]["essential"],
                                            "coefficient": data["terms"][0]["coefficient"]}]
    code, text = call("decompose", "--n", "3", "--path", "0,1,0,2")
    assert code == 0 and len(text.splitlines()) == 2


def test_tl_command():
    code, text = call("tl", "--n", "3", "--steps", "5", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["nonnegative_roots"] == ["0", "1", "sqrt(2)"]
    code, _ = call("tl", "--n", "3", "--steps", "4", "--beta", "zero")
    assert code == 0  # beta = 0 is a root of the quartic relation and of TL1/TL2


def test_output_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert call("verify", "--n", "3", "--format", "json", "--output", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_threads_do_not_change_output(tmp_path):
    env = dict(os.environ, QG_THREADS="3")
    argv = [sys.executable, "-m", "qgroupoid", "verify", "--n", "3", "--format", "csv"]
    par = subprocess.run(argv, env=env, capture_output=True, check=True).stdout
    env["QG_THREADS"] = "1"
    seq = subprocess.run(argv, env=env, capture_output=True, check=True).stdout
    assert par == seq and par.startswith(b"kind,id,status")
