import json
import subprocess
import sys

import pytest

from wqt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_sl2(capsys):
    code, out, _ = run(capsys, "run", "--type", "A1", "--start", "Y[1](q^0 t^0)")
    assert code == 0
    assert "status: Completed" in out and "monomials: 2" in out


def test_run_d4_fails_with_witnesses(capsys, tmp_path):
    path = tmp_path / "d4.json"
    code, out, _ = run(capsys, "run", "--type", "D4", "--start", "Y[2](q^0 t^0)", "--json", str(path))
    assert code == 2
    assert "Y[2](q^-4 t^4)^-1 * Y[4](q^-3 t^3) * Y[4](q^-1 t^1)" in out
    assert "Y[2](q^-2 t^2)^2" in out
    doc = json.loads(path.read_text())
    assert doc["status"] == "Failed" and len(doc["witnesses"]) == 4


def test_truncation_exit_code(capsys):
    code, out, _ = run(capsys, "run", "--type", "E8", "--start", "Y[1](q^0 t^0)", "--max-monomials", "50")
    assert code in (2, 3)


def test_g2_run_then_verify_and_limit(capsys, tmp_path):
    path = tmp_path / "g2.json"
    dot = tmp_path / "g2.dot"
    code, _, _ = run(capsys, "run", "--type", "G2", "--start", "Y[1](q^0 t^0)", "--json", str(path), "--dot", str(dot))
    assert code == 0
    assert dot.read_text().startswith('digraph "G2"')
    code, out, _ = run(capsys, "verify", "--json", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["pairings"] > 0 and report["violations"] == []
    code, out, _ = run(capsys, "limit", "--json", str(path))
    assert code == 0
    assert "weight sum: (0, 0)" in out


def test_limit_sl2_text(capsys, tmp_path):
    path = tmp_path / "a1.json"
    run(capsys, "run", "--type", "A1", "--start", "Y[1](q^0 t^0)", "--json", str(path))
    code, out, _ = run(capsys, "limit", "--json", str(path))
    assert code == 0
    assert out.splitlines()[0] == "1*Y[1,q^0] + 1*Y[1,q^-2]^-1"


@pytest.mark.parametrize(
    "tname,node,count",
    [("B3", 3, 8), ("C3", 2, 14), ("A4", 2, 10)],
)
def test_fundamental_pipeline(capsys, tname, node, count):
    code, out, _ = run(capsys, "fundamental", "--type", tname, "--node", str(node))
    assert code == 0
    assert f"monomials: {count}" in out
    assert "0 violations" in out
    assert "catalog: match" in out


def test_fundamental_uncovered(capsys):
    code, out, _ = run(capsys, "fundamental", "--type", "G2", "--node", "2")
    assert code == 0
    assert "catalog: not covered" in out


def test_catalog_c2(capsys, tmp_path):
    path = tmp_path / "c2.json"
    code, out, _ = run(capsys, "catalog", "--type", "C2", "--node", "2", "--json", str(path))
    assert code == 0
    assert out.strip().splitlines()[-1] == "monomials: 5"
    assert len(json.loads(path.read_text())["monomials"]) == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--type", "A1", "--start", "Y[1](q^0 t^0)^-1"],
        ["run", "--type", "A1", "--start", "garbage"],
        ["run", "--type", "Q1", "--start", "Y[1](q^0 t^0)"],
        ["run", "--type", "A1"],
        ["run", "--type", "A1", "--start", "Y[1](q^0 t^0)", "--bogus"],
        ["catalog", "--type", "E6", "--node", "1"],
        ["fundamental", "--type", "A2", "--node", "3"],
    ],
)
def test_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_malformed_json_input(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "verify", "--json", str(path))[0] == 1
    assert run(capsys, "limit", "--json", str(tmp_path / "absent.json"))[0] == 1


def test_seed_from_environment(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("WQT_SEED", "17")
    path = tmp_path / "a2.json"
    run(capsys, "run", "--type", "A2", "--start", "Y[1](q^0 t^0)", "--json", str(path))
    assert json.loads(path.read_text())["config"]["equality_seed"] == 17
    monkeypatch.setenv("WQT_SEED", "x")
    assert run(capsys, "run", "--type", "A2", "--start", "Y[1](q^0 t^0)")[0] == 1


def test_reruns_are_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(capsys, "run", "--type", "C3", "--start", "Y[2](q^0 t^0)", "--json", str(p))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point_help():
    proc = subprocess.run([sys.executable, "-m", "wqt", "run", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for flag in ("--type", "--start", "--max-height", "--max-monomials", "--no-path-check", "--seed", "--json", "--dot"):
        assert flag in proc.stdout
