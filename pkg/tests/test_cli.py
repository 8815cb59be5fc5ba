from __future__ import annotations

import json
import subprocess
import sys

import pytest

from lieindex.cli import SpecError, algebra_from_spec, main, parse_spec


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "spec, value",
    [("mautner", 2), ("so(5)", 2), ("takiff(sl(2),2)", 2), ("iw(sl(3), borel)", 2), ("iw(gl(3), so)", 3),
     ("semidirect(irr(4))", 1), ("semidirect(adj(sl(2)))", 2), ("sp(4)", 2), ("nilrad(4)", 2), ("borel(4)", 2),
     ("heisenberg(5)", 1)],
)
def test_index_command(spec, value, capsys):
    code, out, _ = run(["index", spec, "--json"], capsys)
    assert code == 0
    assert json.loads(out)["value"] == value


def test_text_output_is_exact(capsys):
    code, out, _ = run(["index", "sl(3)", "--trials", "2", "--coeff-bound", "10"], capsys)
    assert code == 0
    assert "ind = 2" in out and "error_bound = 64/441" in out
    assert "." not in out.split("witness")[0].replace("error_bound", "")


@pytest.mark.parametrize("spec", ["foo(3)", "sl(3", "sl(3))", "iw(sl(3), nope)", "takiff(sl(2))", "sl(x)", "sl(2) sl(3)", "sl(#)"])
def test_parse_errors_exit_2(spec, capsys):
    code, _, err = run(["index", spec], capsys)
    assert code == 2 and err.startswith("error:")


def test_construction_error_exits_3(capsys):
    code, _, err = run(["index", "sp(3)"], capsys)
    assert code == 3


def test_grammar():
    node = parse_spec("iw(takiff(sl(2), 3), ideal)")
    assert node.head == "iw" and node.args[0].head == "takiff"
    assert algebra_from_spec("iw(takiff(sl(2), 3), ideal)").dim == 9
    with pytest.raises(SpecError):
        parse_spec("")


def test_save_load_roundtrip(tmp_path, capsys):
    path = tmp_path / "m.json"
    assert main(["save", "mautner", "--out", str(path)]) == 0
    code, out, _ = run(["load", str(path)], capsys)
    assert code == 0 and out == path.read_text()
    code, out, _ = run(["index", f"@{path}", "--json"], capsys)
    assert json.loads(out)["value"] == 2


def test_load_jacobi_violation_exit_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 3, "labels": ["a", "b", "c"], "brackets": [[0, 1, [[1, "1/1"]]], [1, 2, [[0, "1/1"]]]]}')
    code, _, err = run(["load", str(path)], capsys)
    assert code == 3 and "(a, b, c)" in err


def test_load_truncated_exit_2(tmp_path, capsys):
    path = tmp_path / "t.json"
    path.write_text('{"dim": 4, "labels": ["P", "Q"')
    assert run(["load", str(path)], capsys)[0] == 2
    assert run(["load", str(tmp_path / "missing.json")], capsys)[0] == 2


def test_suite_filter_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["suite", "--filter", "P1*", "--seed", "7", "--json", "--out", str(a)]) == 0
    assert main(["suite", "--filter", "P1*", "--seed", "7", "--json", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["seed"] == 7 and doc["claims"]
    assert all(c["claim_id"].startswith("P1") for c in doc["claims"])


def test_suite_text(capsys):
    code, out, _ = run(["suite", "--filter", "P5.5*"], capsys)
    assert code == 0
    assert "P5.5-counterexample-gl4" in out and "fails" in out and "0 unexpected" in out


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("LIEINDEX_SEED", "42")
    _, out, _ = run(["index", "sl(2)", "--json"], capsys)
    assert json.loads(out)["seed"] == 42
    monkeypatch.setenv("LIEINDEX_SEED", "x")
    assert run(["index", "sl(2)"], capsys)[0] == 2


def test_bad_flags_exit_2(capsys):
    assert run(["index", "sl(2)", "--trials", "0"], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lieindex", "index", "so(4)"], capture_output=True, text=True)
    assert proc.returncode == 0 and "ind = 2" in proc.stdout
