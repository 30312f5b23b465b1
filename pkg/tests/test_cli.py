import json
import subprocess
import sys
from pathlib import Path

import pytest

from hallgame.assign import augment, parse_certificate
from hallgame.cli import main
from hallgame.graph import parse_bipartite

from cli_cases import CASES

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def run(argv, capsys, monkeypatch):
    monkeypatch.chdir(DATA)
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys, monkeypatch):
    argv = CASES[name]
    code, out, _ = run(argv, capsys, monkeypatch)
    assert out == (GOLDEN / f"{name}.out").read_text()
    assert code == (1 if name == "verify_bad" else 0)
    if "--json" in argv:
        json.loads(out)


def test_certificate_reparses(capsys, monkeypatch):
    for f in ("star.bip", "k33.bip", "hall4.bip"):
        code, out, _ = run(["certificate", f], capsys, monkeypatch)
        g = parse_bipartite((DATA / f).read_text())
        cert = parse_certificate(augment(g), out)
        assert code == 0 and not cert.problems(g)


def test_assign_output_verifies(capsys, monkeypatch, tmp_path):
    code, out, _ = run(["assign", "hall4.bip"], capsys, monkeypatch)
    p = tmp_path / "a.txt"
    p.write_text(out)
    code, out, _ = run(["verify-assign", "hall4.bip", str(p)], capsys, monkeypatch)
    assert (code, out) == (0, "ok\n")


@pytest.mark.parametrize("argv, code", [
    (["certificate", "missing-file.bip"], 2),
    (["certificate", "bad.bip"], 2),
    (["certificate", "tight2.graph"], 2),
    (["solve", "big.bip"], 3),
    (["hyp", "assign", "triangle.hyp"], 2),
    (["bench-tightness", "--n-max", "0"], 2),
    ([], 2),
])
def test_error_exit_codes(argv, code, capsys, monkeypatch):
    got, out, err = run(argv, capsys, monkeypatch)
    assert got == code
    assert out == "" and err


def test_env_bound_override(capsys, monkeypatch):
    monkeypatch.setenv("HALLGAME_MINIMAX_MAX_VERTICES", "4")
    code, _, err = run(["solve", "star.bip"], capsys, monkeypatch)
    assert code == 3 and "HALLGAME_MINIMAX_MAX_VERTICES" in err


def test_assign_seat_fallback_note(capsys, monkeypatch):
    code, out, err = run(["play", "star.bip", "--p1", "assign", "--p2", "assign"],
                         capsys, monkeypatch)
    assert code == 0 and "falls back" in err and out.endswith("winner 2\n")


def test_stdin_player_via_subprocess():
    r = subprocess.run([sys.executable, "-m", "hallgame", "play", "k11.bip", "--p1", "stdin",
                        "--p2", "first"], cwd=DATA, input="v1\nw1\n", capture_output=True,
                       text=True)
    assert r.returncode == 0
    assert r.stdout == "v0 v1 u1 w1\nwinner 1\n"
    assert "options" in r.stderr


def test_stdin_input_dash():
    r = subprocess.run([sys.executable, "-m", "hallgame", "certificate", "-"],
                       input=(DATA / "star.bip").read_text(), capture_output=True, text=True)
    assert r.stdout == (GOLDEN / "certificate_star.out").read_text()
