import json
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import BK_PATH, EXCEPTIONAL
from nearly_toric import psi as psi_mod
from nearly_toric.bk import path_to_perm
from nearly_toric.classify import ClassificationRecord, classify
from nearly_toric.cli import render, run
from nearly_toric.dyck import DyckPath
from nearly_toric.perm import format_perm

GOLDEN = Path(__file__).parent / "data" / "golden"


@pytest.mark.parametrize("argv,golden", [
    (["classify", "1,2,5,4,3"], "classify_12543.txt"),
    (["classify", "2,4,5,3,1", "--format", "json"], "classify_24531.json"),
    (["dyck", "to-perm", "NNEENNNNEEENNEEE"], "dyck_bk.txt"),
    (["dyck", "render", "NNEENNNNEEENNEEE"], "render_bk.txt"),
    (["dyck", "render", "NNEENNNNEEENNEEE", "--ascii"], "render_bk_ascii.txt"),
    (["psi", "forward", "2,6,3,1,4,7,8,5", "--variant", "literal", "--format", "json"], "psi_literal.json"),
    (["verify", "--n-max", "5", "--format", "csv"], "verify_5.csv"),
])
def test_golden(argv, golden):
    code, out = run(argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_classify_json_matches_library():
    code, out = run(["classify", "2 6 3 1 4 7 8 5", "--format", "json"])
    data = json.loads(out)
    assert data.pop("permutation") == "2 6 3 1 4 7 8 5"
    assert ClassificationRecord.from_dict(data) == classify((2, 6, 3, 1, 4, 7, 8, 5))


def test_classify_csv():
    code, out = run(["classify", "321", "--format", "csv"])
    header, row = out.splitlines()
    assert header.startswith("permutation,smooth,complexity_one")
    assert row.startswith("3 2 1,true,smooth")


def test_dyck_commands():
    code, out = run(["dyck", "to-perm", "1,1,0,0,1,1,1,1,0,0,0,1,1,0,0,0", "--format", "json"])
    assert json.loads(out)["permutation"] == "2 1 6 5 4 8 7 3"
    code, out = run(["dyck", "from-perm", "2 1 6 5 4 8 7 3", "--format", "json"])
    assert json.loads(out)["path"] == BK_PATH.steps
    for p in EXCEPTIONAL:
        code, out = run(["dyck", "is-spherical", p.steps, "--format", "json"])
        assert json.loads(out)["spherical"] is False


def test_render_staircase():
    text = render(DyckPath.staircase(4), ascii_only=True)
    lines = text.splitlines()
    assert len(lines) == 5
    assert lines == ["      +--", "    +-+", "  +-+", "+-+", "|"]


def test_render_marks_diagonal():
    text = render(DyckPath.elbow(3))
    assert text.splitlines()[1:3] == ["│ · \\", "│ \\"]


def test_psi_commands_match_library():
    v = (2, 6, 3, 1, 4, 7, 8, 5)
    image, wit = psi_mod.psi_with_witness(v)
    code, out = run(["psi", "forward", "2,6,3,1,4,7,8,5", "--format", "json"])
    data = json.loads(out)
    assert data["output"] == format_perm(image)
    assert data["case"] == 2 and data["witness"] == list(wit.word)
    code, out = run(["psi", "inverse", data["output"], "--format", "json"])
    assert json.loads(out)["output"] == "2 6 3 1 4 7 8 5"
    code, out = run(["psi", "inverse", "3,6,1,2,4,7,5", "--variant", "literal"])
    assert "2 6 3 1 4 7 8 5" in out


def test_enumerate_command():
    code, out = run(["enumerate", "--n-max", "5", "--format", "json"])
    rows = json.loads(out)
    assert rows[5]["a"] == 25 and rows[5]["b"] == 6


@pytest.mark.parametrize("argv", [
    ["psi", "forward", "1,2,3,4,5"],
    ["psi", "inverse", "1,2,3,4,5"],
    ["dyck", "from-perm", "3,1,2"],
    ["dyck", "to-perm", "NEEN"],
    ["classify", "1,1,2"],
    ["verify", "--n-max", "11"],
])
def test_domain_errors_exit_2(argv, capsys):
    code, _ = run(argv)
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_verify_exit_codes():
    assert run(["verify", "--n-max", "2"])[0] == 0
    assert run(["verify", "--n-max", "5", "--fib-seeds", "1,1"])[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nearly_toric", "dyck", "to-perm", "NNEENNNNEEENNEEE"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "2 1 6 5 4 8 7 3" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "nearly_toric", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_render_round_trip_size():
    for p in EXCEPTIONAL:
        assert len(render(p).splitlines()) == p.n + 1
        assert path_to_perm(p)
