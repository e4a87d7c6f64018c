import json
import subprocess
import sys

import pytest

from harmonica.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_eval(capsys):
    code, d = js(capsys, "eval", "X0^2 (X1 - 1)")
    assert code == 0 and d == {"algebra": "VB", "value": "-X0^2 + X0^2 X1"}


def test_eval_with_explicit_algebra(capsys):
    code, d = js(capsys, "eval", "X0 + 1/2", "--algebra", "VB2")
    assert d["algebra"] == "VB2" and d["value"] == "1/2 + X0"


def test_delta_betti(capsys):
    code, d = js(capsys, "delta-betti", "X0")
    assert code == 0
    assert d["delta"] == "-X0 - Y0 + X0 X1 + Y0 Y1"
    assert d["in_wb_tensor_wb"] is True


def test_delta_derham(capsys):
    code, d = js(capsys, "delta-derham", "e0")
    assert d["delta"] == "e0 e1 - e1 f1 + f0 f1"


def test_gr(capsys):
    code, d = js(capsys, "gr", "(X0 - 1)(Y1 - 1)", "--trunc", "3")
    assert d["filtration_degree"] == 2 and d["leading_class"] == "e0 f1"


def test_gr_of_p5_element(capsys):
    code, d = js(capsys, "gr", "x15 X0 - 1")
    assert d["leading_class"] == "t15 + e0"


def test_gr_compare_reports_literal_failure(capsys):
    code, d = js(capsys, "gr-compare", "--trunc", "4")
    assert d["objects"]["ok"] and d["delta_lifted"]["ok"]
    assert not d["delta_literal"]["ok"]
    assert code == 1


def test_p5_eval(capsys):
    code, d = js(capsys, "p5-eval", "x13")
    assert d["value"] == "x35^-1 x25^-1 x15^-1 X1^-1 X0^-1"
    assert d["projections"]["pr12"] == "Y1^-1 Y0^-1"


def test_fox(capsys):
    code, d = js(capsys, "fox", "x25 x15 - 1")
    assert code == 0 and d["roundtrip"]
    # k = sum (x_i5 - 1) q_i on the left, sum p_i (x_i5 - 1) on the right
    assert d["left"] == {"x15": "1", "x25": "x15", "x35": "0"}
    assert d["right"] == {"x15": "x25", "x25": "1", "x35": "0"}


def test_fox_outside_kernel(capsys):
    code, out, err = run(capsys, "fox", "X0")
    assert code == 1 and "kernel" in err


def test_rvarpi_and_lie_rvarpi(capsys):
    code, d = js(capsys, "rvarpi", "x25")
    assert d["rvarpi"][1] == ["-1 + x15", "x25", "-1 + x35"]
    code, d = js(capsys, "lie-rvarpi", "t15")
    assert d["lie_rvarpi"][0] == ["t15", "t25", "t35"]


def test_up5_eval(capsys):
    code, d = js(capsys, "up5-eval", "e0 t25")
    assert d["value"] == "t25 t35 + t25 e0 - t35 t25"


def test_wb_member(capsys):
    code, d = js(capsys, "wb-member", "X1^-1")
    assert d == {"input": "X1^-1", "member": True, "constant": "1", "quotient": "-X1^-1"}
    code, d = js(capsys, "wb-member", "X0")
    assert d["member"] is False


def test_parse_errors_exit_2(capsys):
    code, out, err = run(capsys, "eval", "X0 +")
    assert code == 2 and "position 4" in err
    code, out, err = run(capsys, "delta-betti", "Q7")
    assert code == 2


def test_wrong_algebra_exit_1(capsys):
    code, out, err = run(capsys, "delta-betti", "e0", "--algebra", "VDR")
    assert code == 1


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["verify", "--suite", "nope"])
    assert ei.value.code == 2
    with pytest.raises(SystemExit) as ei:
        main([])
    assert ei.value.code == 2
    code, _, _ = run(capsys, "gr", "X0", "--trunc", "1")
    assert code == 2


def test_verify_exit_codes(capsys):
    code, d = js(capsys, "verify", "--suite", "factorization")
    assert code == 0 and d["summary"]["passed"] == 2
    code, d = js(capsys, "verify", "--suite", "gr", "--samples", "10")
    assert code == 1


def test_verify_human(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "factorization", "--human")
    assert out.splitlines()[-1].startswith("2/2 passed")


def test_env_defaults(monkeypatch, capsys):
    monkeypatch.setenv("HARMONICA_TRUNC", "3")
    monkeypatch.setenv("HARMONICA_SEED", "11")
    code, d = js(capsys, "verify", "--suite", "factorization")
    assert d["config"]["truncation"] == 3 and d["config"]["seed"] == 11


def _strip(text):
    d = json.loads(text)
    d.pop("generated_at")
    d.pop("timing")
    return d


def test_verify_deterministic_across_processes():
    cmd = [sys.executable, "-m", "harmonica.cli", "verify", "--suite", "braid", "--seed", "7", "--samples", "20"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert _strip(a) == _strip(b)
