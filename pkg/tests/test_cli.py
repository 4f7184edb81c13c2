import json
import os
import subprocess
import sys

import pytest

from gkz.cli import main
from gkz.specfile import parse_spec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def f32(tmp_path, capsys):
    path = tmp_path / "f32.alg"
    assert run(capsys, "construct", "function", "--p", "3", "--x", "2", "-o", str(path))[0] == 0
    return path


def test_analyze_text(capsys, f32):
    code, out, _ = run(capsys, "analyze", str(f32))
    assert code == 0
    for line in ["is_gkz: true", "is_vacuous: false", "units: 4", "unit_generated: true",
                 "sum_units_bound: 2", "jac_dim: 0"]:
        assert line in out.splitlines()


def test_analyze_machine_with_witness(capsys, tmp_path):
    path = tmp_path / "f23.alg"
    run(capsys, "construct", "function", "--p", "2", "--x", "3", "-o", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--machine", "--witness")
    assert code == 0
    d = json.loads(out)
    assert d["is_gkz"] is False and d["witnesses"][0]["values"] == [0, 1]


@pytest.mark.parametrize("args,expect", [
    (["field", "--p", "3", "--k", "2"], ["is_gkz: true", "is_vacuous: true", "units: 8"]),
    (["dual", "--p", "3"], ["is_gkz: true", "jac_dim: 1"]),
])
def test_construct_then_analyze(capsys, tmp_path, args, expect):
    path = tmp_path / "a.alg"
    assert run(capsys, "construct", *args, "-o", str(path))[0] == 0
    out = run(capsys, "analyze", str(path))[1].splitlines()
    for line in expect:
        assert line in out


def test_unitisation_and_group_construction(capsys, tmp_path):
    nil = tmp_path / "nil3.alg"
    run(capsys, "construct", "triangular", "--p", "3", "--m", "3", "--strict", "-o", str(nil))
    code, out, _ = run(capsys, "construct", "unitisation", "--input", str(nil))
    b = parse_spec(out)
    assert code == 0 and b.n == 4 and b.is_valid()
    tbl = tmp_path / "c3.tbl"
    tbl.write_text("0 1 2\n1 2 0\n2 0 1\n")
    code, out, _ = run(capsys, "construct", "group", "--p", "3", "--cayley", str(tbl))
    g = parse_spec(out)
    assert code == 0 and g.n == 3 and g.unit_count == 18


def test_product_and_quotient(capsys, tmp_path, f32):
    code, out, _ = run(capsys, "construct", "product", "--input", str(f32), "--input", str(f32))
    assert code == 0 and parse_spec(out).n == 4
    code, out, _ = run(capsys, "construct", "quotient", "--input", str(f32), "--ideal", "1,0")
    assert code == 0 and parse_spec(out).n == 1


def test_exit_code_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("field 3\ndim 1\nunity 1\nmul 0 0 : 7\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "residue out of range" in err
    assert run(capsys, "analyze", str(tmp_path / "missing.alg"))[0] == 2
    assert run(capsys, "construct", "function", "--p", "4", "--x", "2")[0] == 2
    assert run(capsys, "construct", "function", "--p", "3")[0] == 2
    assert run(capsys, "verify", "--only", "T99")[0] == 2
    nonunital = tmp_path / "n.alg"
    nonunital.write_text("field 2\ndim 1\nunity none\nmul 0 0 : 0\n")
    assert run(capsys, "analyze", str(nonunital))[0] == 2


def test_exit_code_cap_exceeded(capsys, tmp_path):
    path = tmp_path / "f54.alg"
    run(capsys, "construct", "function", "--p", "5", "--x", "4", "-o", str(path))
    env = dict(os.environ, GKZ_MAX_ELEMS="100")
    proc = subprocess.run([sys.executable, "-m", "gkz.cli", "analyze", str(path)], env=env,
                          capture_output=True, text=True)
    assert proc.returncode == 3 and "cap" in proc.stderr
    assert run(capsys, "search", "--p", "2", "--dim", "3", "--exhaustive")[0] == 3


def test_search_outputs(capsys):
    code, out, _ = run(capsys, "search", "--p", "2", "--dim", "2", "--exhaustive", "--machine")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines[0]["kind"] == "census" and lines[0]["valid"] == 12
    code, out, _ = run(capsys, "search", "--p", "3", "--dim", "2", "--samples", "0", "--seed", "1")
    assert code == 0 and "valid: 0" in out


def test_verify_only_t7(capsys):
    code, out, _ = run(capsys, "verify", "--only", "T7", "--machine")
    lines = [json.loads(x) for x in out.splitlines()]
    members = [x for x in lines if x["kind"] == "member"]
    assert code == 0 and all(list(m["results"]) == ["T7"] for m in members)
    assert lines[-1] == {"kind": "verdict", "members": len(members), "ok": True}
