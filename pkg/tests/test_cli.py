import json
import subprocess
import sys

import pytest

from polyfun.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_exit(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["s", "Z/4"], "4"),
    (["s", "rho"], "4"),
    (["s", "Z/6"], "3"),
    (["s-relative", "Z/2[x]/(x^4+x^3)"], "6"),
    (["s-relative", "Z/2[x]/(x^4+x^3)", "--subring", "full"], "4"),
    (["count", "Z/4"], "64"),
    (["count", "Z/2[x]/(x^4+x^3)", "--subring", "prime"], "64"),
    (["smarandache", "1000"], "15"),
    (["psi", "2", "3"], "1024"),
])
def test_simple_commands(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert code == 0 and err == ""
    assert out.strip() == expected


def test_represent(capsys):
    code, out, _ = run(capsys, "represent", "rho", "--function", "0:1, 1:0, a:0, 1+a:0")
    assert (code, out.strip()) == (0, "not representable")
    code, out, _ = run(capsys, "represent", "GF(5)", "--function", "0:4,1:0,2:0,3:0,4:0")
    assert (code, out.strip()) == (0, "4 + x^4")
    code, out, _ = run(capsys, "--json", "represent", "Z/4", "--function", '{"0":0,"1":1,"2":0,"3":1}')
    obj = json.loads(out)
    assert obj["representable"] is True and obj["polynomial"] == "x^2"
    code, out, _ = run(capsys, "represent", "Z/2[x]/(x^2)", "--function", "0:0,1:1,x:x,1+x:1+x")
    assert out.strip() == "X"


def test_represent_degree_cap(capsys):
    code, out, _ = run(capsys, "represent", "Z/4", "--function", "0:0,1:1,2:0,3:1", "--max-deg", "1")
    assert out.strip() == "not representable"


def test_nullpoly(capsys):
    assert run(capsys, "nullpoly", "Z/4", "--poly", "x^4 - 2*x^3 + 3*x^2 - 2*x")[1].strip() == "null"
    assert run(capsys, "nullpoly", "Z/4", "--poly", "x^2 + x")[1].strip() == "not null"
    code, out, _ = run(capsys, "--json", "nullpoly", "Z/2[x]/(x^4+x^3)",
                       "--poly", "x*X + (1+x)*X^2 + X^4")
    assert json.loads(out)["null"] is True


def test_lambda(capsys):
    code, out, _ = run(capsys, "--json", "lambda", "2")
    obj = json.loads(out)
    assert obj["lambda_value"] == "4294967296" and obj["endl_bound"] is None
    assert obj["endl_symbolic"]
    code, out, _ = run(capsys, "lambda", "3")
    assert "6^648" in out and "505 digits" in out


def test_invariants_json_schema_and_determinism(capsys):
    _, first, _ = run(capsys, "--json", "invariants", "Z/2[x]/(x^4+x^3)", "--count")
    _, second, _ = run(capsys, "--json", "invariants", "Z/2[x]/(x^4+x^3)", "--count")
    assert first == second
    obj = json.loads(first)
    assert obj["s"] == 4 and obj["s_prime"] == 6 and obj["order"] == 16
    assert obj["polyfunction_count"] == "4096"
    assert obj["classification"] == "other" and obj["s_equals_order"] is False
    code, out, _ = run(capsys, "invariants", "Z/4")
    assert "classification" in out and "z4" in out


def test_verify_and_catalog(capsys):
    code, out, _ = run(capsys, "verify", "example-ring")
    assert code == 0 and "PASSED" in out
    code, out, _ = run(capsys, "--json", "verify", "kombi", "--n", "6")
    assert code == 0 and json.loads(out)["examined"] == 28
    code, out, _ = run(capsys, "--json", "catalog", "--max-order", "4")
    assert [e["ring"] for e in json.loads(out)][:3] == ["Z/2", "Z/3", "GF(4)"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from polyfun import cli
    from polyfun.verify import VerificationReport

    def broken(_):
        rep = VerificationReport("kombi")
        rep.fail("n=0 k=0", 1, 0)
        return rep

    monkeypatch.setitem(cli.CHECKS, "kombi", broken)
    code, out, _ = run(capsys, "verify", "kombi")
    assert code == 1 and "FAILED" in out


@pytest.mark.parametrize("argv", [
    ["s", "Z/4 x"],
    ["s", "GF(6)"],
    ["s", "Z/1"],
    ["s", "Z/2[y]/(x^2)"],
    ["represent", "Z/4", "--function", "0:1"],
    ["nullpoly", "Z/4", "--poly", "x^"],
    ["s"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run_exit(capsys, *argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv("POLYFUN_MAX_ORDER", "8")
    code, _, err = run(capsys, "s", "Z/16")
    assert code == 3 and err.startswith("budget exceeded")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "polyfun", "s", "GF(9)"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "9"
