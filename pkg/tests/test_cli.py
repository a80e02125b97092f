import io
import json

import pytest

from satake_fl.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_satake_commands():
    assert run("satake", "--d", "2", "--lambda", "1,0") == (0, "v*(m[1,0])\n", "")
    assert run("satake", "--d", "2", "--lambda", "0,0")[1] == "1\n"
    assert run("satake", "--d", "2", "--lambda", "2,0", "--basis", "psi")[1] == "q*m[2,0] + q*m[1,1]\n"
    code, out, _ = run("satake", "--lambda", "2,0", "--format", "json")
    assert code == 0 and json.loads(out)["terms"][0] == {"monomial": [2, 0], "coeff": {"2": 1}}


def test_basechange_commands():
    assert run("basechange", "--d", "2", "--r", "2", "--lambda", "1,-1")[1] == "phi[2,-2] + (1-q)*phi[1,-1] + (q^2-q)*phi[0,0]\n"
    assert run("basechange", "--r", "1", "--lambda", "2,0,-1")[1] == "phi[2,0,-1]\n"
    assert run("basechange", "--lambda", "0,0", "--r", "3")[1] == "phi[0,0]\n"


def test_kostka_table():
    code, out, _ = run("kostka", "--lambda", "2,-2")
    lines = out.splitlines()
    assert code == 0 and lines[0].split() == ["alpha", "K(t=1/q)", "P(q)"]
    assert lines[-1].split() == ["0,0", "q^-2", "1"]


def test_usage_errors():
    assert run("satake", "--lambda", "1,2")[0] == 2
    assert run("satake", "--d", "3", "--lambda", "1,0")[0] == 2
    assert run("basechange", "--lambda", "1,-1", "--r", "9")[0] == 2
    assert run("satake", "--lambda", "5,-5")[0] == 2
    assert run("verify-fl", "--p", "2")[0] == 2


def test_orbital_commands():
    code, out, _ = run("orbital", "--p", "3", "--entry", "1", "--entry", "1+pi^2", "--lambda", "0,0", "--format", "json")
    assert code == 0 and json.loads(out)["value"] == "9/1"
    code, out, _ = run("twisted-orbital", "--p", "3", "--r", "2", "--entry", "1", "--entry", "g", "--lambda", "1,-1")
    assert code == 0 and out.startswith("value 8\n")
    fn = json.dumps({"d": 2, "terms": [{"coweight": [0, 0], "coeff": {"0": 2}}]})
    code, out, _ = run("orbital", "--p", "2", "--entry", "1", "--entry", "1+pi", "--lambda", "0,0", "--function", fn, "--format", "json")
    assert json.loads(out)["value"] == "4/1"


def test_verify_fl_inline():
    code, out, _ = run("verify-fl", "--p", "2", "--r", "2", "--lambda", "1,-1", "--entry", "1", "--entry", "1+g*pi")
    rep = json.loads(out)
    assert code == 0 and rep["equal"] and rep["stable"]
    assert json.loads(json.dumps(rep)) == rep
    code, out, _ = run("verify-fl", "--p", "2", "--r", "2", "--lambda", "0,0", "--entry", "pi", "--entry", "g*pi^-1")
    assert code == 0 and json.loads(out)["lhs"]["value"] == json.loads(out)["rhs"]["value"]


def test_verify_fl_not_regular():
    code, out, err = run("verify-fl", "--p", "2", "--r", "2", "--lambda", "1,-1", "--entry", "1", "--entry", "g")
    assert code == 2 and "NotRegular" in err


def test_verify_fl_instance_file(tmp_path):
    path = tmp_path / "inst.jsonl"
    rows = [
        {"p": 3, "r": 2, "lambda": [0, 0], "delta": ["1", "g"]},
        {"p": 2, "r": 2, "lambda": [1, -1], "delta": ["pi", "g*pi^-1"]},
    ]
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    code, out, _ = run("verify-fl", "--instances", str(path))
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 2 and all(x["equal"] for x in lines)
    bad = tmp_path / "bad.jsonl"
    bad.write_text(json.dumps(rows[0]) + "\n{not json\n")
    code, _, err = run("verify-fl", "--instances", str(bad))
    assert code == 2 and ":2:" in err


def test_verify_fl_window_unstable_exit_code():
    code, out, _ = run("verify-fl", "--p", "3", "--r", "2", "--lambda", "0,0", "--entry", "1", "--entry", "1+pi^2", "--window", "1")
    assert code == 3 and json.loads(out)["error"] == "WindowUnstable"


def test_determinism():
    argv = ("verify-fl", "--p", "3", "--r", "2", "--lambda", "1,-1", "--entry", "1", "--entry", "g")
    assert run(*argv) == run(*argv)


def test_selftest():
    assert run("selftest", "--only", "saito-shintani", "--trials", "100")[0] == 0
    assert run("selftest", "--only", "lusztig-kato", "--dmax", "3")[0] == 0
    code, out, _ = run("selftest", "--seed", "4")
    assert code == 0 and "FAIL" not in out
