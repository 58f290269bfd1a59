import csv
import json
import subprocess
import sys
from types import SimpleNamespace

import pytest

from nctorus import cli


def run(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def test_help_exits_cleanly(capsys):
    code, _ = run(["--help"], capsys)
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["verify", "--window", "2"],
    ["verify", "--window", "x"],
    ["dims", "--gamma", "z5"],
    ["pair", "--format", "xml"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv, capsys):
    assert cli.main(argv) == 2


def test_verify_z4(capsys):
    code, out = run(["verify", "--gamma", "z4", "--seed", "1"], capsys)
    assert code == 0
    assert "z4: 8/8 projections verified" in out
    assert "FAIL" not in out
    assert "component_map: inverse" in out


def test_verify_reports_first_failure(monkeypatch, capsys):
    real = cli._checks

    def broken(gamma, cfg, rng):
        return real(gamma, cfg, rng)[:2] + [("z3: deliberately false", lambda: False)]

    monkeypatch.setattr(cli, "_checks", broken)
    code, out = run(["verify", "--gamma", "z3"], capsys)
    assert code == 1
    assert "first failure: z3: deliberately false" in out


def test_dims_markdown(capsys):
    code, out = run(["dims", "--gamma", "z3", "--window", "4"], capsys)
    assert code == 0
    assert "| HP_even | 8 | 8 |" in out


def test_dims_json(capsys):
    code, out = run(["dims", "--gamma", "z6", "--format", "json", "--window", "4"], capsys)
    assert code == 0
    (rep,) = json.loads(out)
    assert rep["dims"]["HC2"] == 10


@pytest.mark.parametrize("fmt,ext", [("markdown", "md"), ("csv", "csv"), ("json", "json")])
def test_pair_writes_tables(fmt, ext, tmp_path, capsys):
    code, out = run(["pair", "--gamma", "z3", "--format", fmt, "--out", str(tmp_path)], capsys)
    assert code == 0
    path = tmp_path / f"z3-table.{ext}"
    text = path.read_text(encoding="utf-8")
    if fmt == "csv":
        body = [r for r in csv.reader(l for l in text.splitlines() if not l.startswith("#"))]
        assert len(body) == 8 and body[0][0] == "projection"
    elif fmt == "json":
        assert json.loads(text)["gamma"] == "z3"
    else:
        assert text.startswith("# z3")


def test_pair_numeric_check(tmp_path, capsys):
    code, out = run(["pair", "--gamma", "z4", "--numeric-check", "--seed", "5", "--out", str(tmp_path)], capsys)
    assert code == 0
    assert "72/72 cells" in out


def test_reconcile(tmp_path, capsys):
    code, out = run(["reconcile", "--gamma", "z4", "--out", str(tmp_path)], capsys)
    assert code == 0
    data = json.loads((tmp_path / "z4-reconcile.json").read_text(encoding="utf-8"))
    assert data["counts"]["paper-internal-conflict"] == 1
    assert data["strict_failures"] == []
    assert "p2 | D_{0,0}" in out


def test_console_script_without_numba(tmp_path):
    env = {"NCTORUS_NO_NUMBA": "1", "PATH": "/usr/bin:/bin:/usr/local/bin"}
    code = (
        "import sys; from nctorus import _unionfind, cli; "
        "assert _unionfind.backend() == 'numpy'; sys.exit(cli.main(['dims', '--gamma', 'z3', '--window', '4']))"
    )
    r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, timeout=300)
    assert r.returncode == 0, r.stderr
    assert "| H0 | 7 | 7 |" in r.stdout
