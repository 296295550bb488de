import json
import subprocess
import sys

import pytest

from restricted_poisson.cli import main
from restricted_poisson.lie import CATALOG_NAMES


def write_spec(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


CLASSICAL = {"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "0", "y": "0"}}


# -- exit codes ---------------------------------------------------------------------

def test_verify_spec_passes(tmp_path, capsys):
    path = write_spec(tmp_path, "c.json", CLASSICAL)
    code, out, _ = run(capsys, "verify", "--spec", path, "--samples", "6")
    assert code == 0
    assert "PASS" in out


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_every_catalog_entry_verifies(name, capsys):
    code, out, _ = run(capsys, "verify", "--catalog", name, "--samples", "4",
                       "--degree-bound", "1")
    assert code == 0, out


def test_semilinear_shift_fails_with_witness(tmp_path, capsys):
    spec = dict(CLASSICAL, pmap_shift={"x": "1", "y": "0"})
    path = write_spec(tmp_path, "s.json", spec)
    code, out, _ = run(capsys, "verify", "--spec", path, "--suite", "frobenius", "--json")
    assert code == 1
    rep = json.loads(out)
    failing = [c for c in rep["checks"] if not c["passed"]]
    assert failing and failing[0]["witnesses"]


def test_derivation_shift_passes(tmp_path, capsys):
    spec = dict(CLASSICAL, pmap_derivation={"x": "1", "y": "0"})
    path = write_spec(tmp_path, "d.json", spec)
    code, out, _ = run(capsys, "verify", "--spec", path, "--samples", "6")
    assert code == 0, out


@pytest.mark.parametrize("data, needle", [
    ({"p": 4, "vars": ["x"]}, "odd prime"),
    ({"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "0"}}, "'y'"),
    ({"p": 3, "vars": ["x"], "colour": 1}, "unknown field"),
    ({"p": 3, "vars": ["x", "y"], "bracket": {"x,z": "1"}}, "bracket.x,z"),
    ({"vars": ["x"]}, "missing field 'p'"),
])
def test_input_errors_exit_2(tmp_path, capsys, data, needle):
    path = write_spec(tmp_path, "bad.json", data)
    code, _, err = run(capsys, "verify", "--spec", path)
    assert code == 2
    assert needle in err


def test_invalid_json_reports_position(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"p": 3,\n "vars": [x]}')
    code, _, err = run(capsys, "verify", "--spec", str(path))
    assert code == 2
    assert "line 2" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--spec", "/nonexistent/spec.json")
    assert code == 2 and "cannot read" in err


def test_jacobson_violation_exit_1(tmp_path, capsys):
    spec = dict(CLASSICAL, pmap={"x": "x", "y": "0"})
    path = write_spec(tmp_path, "j.json", spec)
    code, _, _ = run(capsys, "verify", "--spec", path)
    assert code == 1


def test_spec_and_catalog_conflict(tmp_path, capsys):
    path = write_spec(tmp_path, "c.json", CLASSICAL)
    code, _, _ = run(capsys, "verify", "--spec", path, "--catalog", "classical2")
    assert code == 2


# -- subcommands --------------------------------------------------------------------------

def test_build_pmap_text(tmp_path, capsys):
    path = write_spec(tmp_path, "c.json", CLASSICAL)
    code, out, _ = run(capsys, "build-pmap", "--spec", path)
    assert code == 0
    assert "pp(x*y) = x*y" in out


def test_build_pmap_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, _, _ = run(capsys, "build-pmap", "--catalog", "sl2-trunc", "--out", str(target))
    assert code == 0
    table = json.loads(target.read_text())
    values = {row["monomial"]: row["value"] for row in table["values"]}
    assert values["h"] == "h"
    assert len(values) == 27


def test_quantize(capsys):
    code, out, _ = run(capsys, "quantize", "--catalog", "classical2", "--mode", "onesided",
                       "--f", "xy", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["info"]["M"] == {"0": "x^3*y^3", "1": "0", "2": "x*y"}
    assert rep["info"]["pmap"] == "x*y"


def test_quantize_needs_constant_bracket(capsys):
    code, _, err = run(capsys, "quantize", "--catalog", "sl2-sym", "--mode", "symmetric")
    assert code == 2 and "constant" in err


def test_tograph(capsys):
    code, out, _ = run(capsys, "tograph", "--p", "5", "--n", "2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert all(c["N"] % 5 == 0 for c in rep["info"]["classes"])
    code, out, _ = run(capsys, "tograph", "--p", "3", "--n", "2", "--f", "xy", "--json")
    assert code == 0


def test_tensor(tmp_path, capsys):
    a = write_spec(tmp_path, "a.json", CLASSICAL)
    b = write_spec(tmp_path, "b.json", {"catalog": "sl2-sym"})
    code, out, _ = run(capsys, "tensor", "--spec", a, "--spec", b, "--samples", "4")
    assert code == 0, out
    code, _, _ = run(capsys, "tensor", "--spec", a)
    assert code == 2


def test_lie_rinehart(capsys):
    code, _, _ = run(capsys, "lie-rinehart", "--catalog", "classical2", "--samples", "8")
    assert code == 0
    code, out, _ = run(capsys, "lie-rinehart", "--catalog", "classical2", "--samples", "8",
                       "--mutated")
    assert code == 1
    assert "scalar_rule" in out


def test_hopf(capsys):
    code, _, _ = run(capsys, "hopf", "--catalog", "sl2-sym")
    assert code == 0
    code, _, err = run(capsys, "hopf", "--catalog", "classical2")
    assert code == 2


# -- determinism ---------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["verify", "--catalog", "sl2-sym", "--samples", "6", "--seed", "3", "--json"],
    ["lie-rinehart", "--catalog", "classical2", "--samples", "6", "--seed", "1", "--json"],
])
def test_json_is_reproducible(capsys, argv):
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "restricted_poisson", "tograph", "--p", "3",
                           "--n", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
