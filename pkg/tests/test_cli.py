import io
import json
import subprocess
import sys

import pytest

from hecke_cocenter import cocenterlab as cl
from hecke_cocenter.cli import emit_report, parse_expression, run, UsageError
from hecke_cocenter.heckeclifford import symbolic_algebra
from hecke_cocenter.weylcomb import WeylType


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classes():
    code, out, _ = cli("classes", "--type", "A", "--n", "4")
    assert code == 0
    assert json.loads(out) == ["(3,1)", "(1,1,1,1)"]
    code, out, _ = cli("classes", "--type", "B", "--n", "3", "--detail")
    rows = json.loads(out)
    assert {r["label"] for r in rows} == {"(3)", "(1,1,1)", "((1),(2))"}


def test_normalize_examples():
    assert cli("normalize", "--type", "B", "--n", "2", "--expr", "s2*x2")[1] == "-x2·s2 - √2·v\n"
    assert cli("normalize", "--type", "A", "--n", "2", "--expr", "s1*x1")[1] == "x2·s1 - u - u·c1·c2\n"
    assert cli("normalize", "--type", "A", "--n", "2", "--expr", "c1^2 - 1")[1] == "0\n"
    assert cli("spin-normalize", "--type", "A", "--n", "3", "--expr", "t1*b1")[1] == "-b2·t1 + 1\n"


def test_normalize_specialized_and_json():
    code, out, _ = cli("normalize", "--type", "A", "--n", "2", "--expr", "s1*x1", "--u0", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["u"] == "2"
    assert {t["coeff"] for t in data["terms"]} == {"1", "-2"}


def test_parse_expression_arithmetic():
    H = symbolic_algebra(WeylType("A", 3))
    assert parse_expression("(x1 + x2)^2 - x1**2 - 2*x1*x2 - x2^2", H).is_zero()
    assert parse_expression("x1/2 + x1/2", H) == H.x(1)
    with pytest.raises(UsageError):
        parse_expression("x1 / x2", H)
    with pytest.raises(UsageError):
        parse_expression("x1 ^ -1", H)
    with pytest.raises(UsageError):
        parse_expression("import os", H)


@pytest.mark.parametrize("argv", [
    ("normalize", "--type", "A", "--n", "3", "--expr", "y1"),
    ("normalize", "--type", "A", "--n", "3", "--expr", "s3"),
    ("verify", "--type", "D", "--n", "3", "--max-deg", "0"),
    ("verify", "--type", "Q", "--n", "3", "--max-deg", "0"),
    ("verify", "--type", "B", "--n", "3", "--max-deg", "-1"),
    ("verify", "--type", "B", "--n", "3", "--max-deg", "1", "--bound", "10"),
    ("verify", "--type", "D", "--n", "4", "--max-deg", "0"),
    ("reduce", "--type", "A", "--n", "3", "--gamma", "2,2"),
    ("acceptance", "--criterion", "99"),
])
def test_usage_errors_exit_2(argv):
    assert cli(*argv)[0] == 2


def test_verify_exit_codes_and_formats():
    code, out, _ = cli("verify", "--type", "B", "--n", "3", "--max-deg", "0")
    assert code == 0 and json.loads(out)["dims"] == [3]
    code, out, _ = cli("verify", "--type", "A", "--n", "2", "--max-deg", "1", "--format", "csv")
    assert code == 1
    assert out.splitlines()[0] == "degree,dim,candidates,verdict,independence"
    assert out.splitlines()[2].startswith("1,1,0,FAILED")
    code, out, _ = cli("verify", "--type", "A", "--n", "2", "--max-deg", "0", "--format", "latex")
    assert "\\begin{tabular}" in out and code == 0
    code, out, _ = cli("verify", "--type", "B", "--n", "2", "--max-deg", "0", "--mode", "spin", "--format", "text")
    assert code == 0 and "verified-dim-match" in out


def test_verify_is_deterministic():
    a = cli("verify", "--type", "B", "--n", "2", "--max-deg", "1")[1]
    b = cli("verify", "--type", "B", "--n", "2", "--max-deg", "1")[1]
    assert a == b


def test_large_guard_prints_estimate():
    code, _, err = cli("verify", "--type", "D", "--n", "4", "--max-deg", "0")
    assert code == 2 and "cost estimate" in err
    code, out, err = cli("verify", "--type", "D", "--n", "4", "--max-deg", "0", "--allow-large")
    assert code == 0 and json.loads(out)["dims"] == [4]


def test_empty_report():
    data = json.loads(emit_report(None, "json"))
    assert data["report"] == "empty" and data["degrees"] == []
    assert emit_report(cl.CocenterReport(), "csv") == "degree,dim,candidates,verdict,independence\n"


def test_reduce():
    code, out, _ = cli("reduce", "--type", "B", "--n", "2", "--window=2,-1")
    data = json.loads(out)
    assert code == 0 and data["reduces_to"] == "((),(2))"
    code, out, _ = cli("reduce", "--type", "A", "--n", "3", "--gamma", "2,1", "--subset", "2,3")
    assert json.loads(out)["value"] == 0


def test_resolve_and_morita():
    code, out, _ = cli("resolve-convention", "--type", "B", "--n", "2", "--max-deg", "0")
    assert code == 0 and json.loads(out)["passing"] == ["paper-4.2"]
    code, out, _ = cli("morita-check", "--type", "B", "--n", "2", "--max-deg", "1", "--pairs", "10")
    data = json.loads(out)
    assert code == 0
    assert data["generator_images"]["solution_count"] == 4
    assert data["relations_failing"] == [] and data["iso"]["ok"]


def test_acceptance_subcommand():
    code, out, _ = cli("acceptance", "--criterion", "6", "--criterion", "11")
    assert code == 0
    assert out.splitlines()[0].startswith("criterion 6: PASS")
    assert out.splitlines()[1].startswith("criterion 11: SKIP")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hecke_cocenter", "classes", "--type", "A", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == ["(3)", "(1,1,1)"]
