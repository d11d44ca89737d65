import io
import json
import os
import subprocess
import sys

import pytest
from gmpy2 import mpfr

from qhyper import __version__
from qhyper.cli import run

VOLATILE = ("elapsed", "wall_time", "generated", "time")


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def _strip(obj):
    if isinstance(obj, dict):
        return {k: _strip(v) for k, v in obj.items() if k not in VOLATILE}
    if isinstance(obj, list):
        return [_strip(v) for v in obj]
    return obj


def test_list():
    code, out, _ = _run("--list")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "45 basic + 7 elliptic entries"
    assert any(line.startswith("cnt87 ") for line in lines)
    assert any("[corrected]" in line for line in lines if line.startswith("msears"))


def test_exact_run_report():
    code, out, err = _run("--identity", "cnt87", "--ranks", "1,2", "--seeds", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["tool"] == "qhyper-verify" and rep["version"] == __version__
    assert rep["summary"]["checks"] == 4 and rep["summary"]["pass"] == 4
    for rec in rep["checks"]:
        assert rec["mode"] == "exact" and rec["verdict"] == "pass"
        assert rec["residual"] == "0" and rec["relative_error"] == "0"
        assert len(rec["digest"]) == 16
    assert rep["identities"]["cnt87"]["pass"] == 4
    assert "4 checks: 4 pass" in err


def test_float_report():
    code, out, _ = _run("--identity", "an10", "--ranks", "1", "--seeds", "1")
    assert code == 0
    rec = json.loads(out)["checks"][0]
    assert rec["mode"] == "float"
    assert mpfr(rec["relative_error"]) < mpfr("1e-40")
    assert len(rec["residual"]) == 2


def test_failure_exit_code():
    code, _, err = _run("--identity", "an10", "--ranks", "1", "--seeds", "1", "--tolerance", "1e-300")
    assert code == 1
    assert "fail" in err


def test_skip_notices():
    code, out, err = _run("--identity", "ell-cnt87,cnnt109", "--ranks", "2,3", "--seeds", "1", "--mode", "pseries")
    rep = json.loads(out)
    assert code == 0
    kinds = {(r["identity"], r["r"]): r["verdict"] for r in rep["checks"]}
    assert kinds[("ell-cnt87", 2)] == "pass" and kinds[("ell-cnt87", 3)] == "pass"
    assert kinds[("cnnt109", 2)] == "skipped" and kinds[("cnnt109", 3)] == "skipped"
    assert rep["summary"]["skipped"] == 2
    assert "no pseries mode" in err


def test_empty_selection():
    code, out, err = _run("--identity", "nothing-*")
    assert code == 0
    assert "0 checks selected" in err
    assert json.loads(out)["summary"]["checks"] == 0


@pytest.mark.parametrize(
    "argv",
    [["--ranks", "x"], ["--jobs", "0"], ["--mode", "symbolic"], ["--precision", "20"], ["--seeds", "-1"],
     ["--identity", "cnt87", "--max-n", "9", "--seeds", "1", "--ranks", "1"]],
)
def test_operational_errors(argv):
    code, _, _ = _run(*argv)
    assert code == 2


def test_atomic_write(tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = _run("--identity", "an32", "--ranks", "1", "--seeds", "1", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["summary"]["pass"] == 1
    assert os.listdir(tmp_path) == ["report.json"]


def test_unwritable_output(tmp_path):
    code, _, err = _run("--identity", "an32", "--ranks", "1", "--seeds", "1",
                        "--out", str(tmp_path / "missing" / "r.json"))
    assert code == 2 and "cannot write" in err


def test_deterministic_and_parallel():
    argv = ["--identity", "cnt65*", "--ranks", "1,2", "--seeds", "2"]
    _, a, _ = _run(*argv)
    _, b, _ = _run(*argv)
    _, c, _ = _run(*argv, "--jobs", "2")
    a, b, c = (_strip(json.loads(x)) for x in (a, b, c))
    assert a == b
    assert a["checks"] == c["checks"]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "qhyper.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == __version__
