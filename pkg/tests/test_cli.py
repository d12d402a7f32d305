import json
import subprocess
import sys
from pathlib import Path

import pytest

from twoorbit.catalog import make
from twoorbit.cli import run
from twoorbit.lattice import FaceLattice, are_isomorphic

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("classify_cuboctahedron.txt", ["classify", "--catalog", "cuboctahedron"], 0),
    ("classify_rhombic_triacontahedron.json",
     ["classify", "--catalog", "rhombic-triacontahedron", "--format", "json"], 0),
    ("analyze_icosidodecahedron.txt", ["analyze", "--catalog", "icosidodecahedron"], 0),
    ("tiling_growth_1.txt", ["tiling", "growth", "--n", "1"], 0),
    ("tiling_solve_planar.txt", ["tiling", "solve-planar"], 0),
    ("tiling_crossing_1_10.json", ["tiling", "crossing", "--u", "1", "--U", "10", "--format", "json"], 0),
    ("tiling_quotient_tet_oct.txt", ["tiling", "quotient", "--family", "tet-oct", "--analyze"], 0),
    ("validate_nonsense.txt", ["validate", "tests/data/nonsense.json"], 1),
]


@pytest.mark.parametrize("golden,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden(golden, argv, code, capsys, monkeypatch):
    monkeypatch.chdir(ROOT)
    assert run(argv) == code
    assert capsys.readouterr().out == (GOLDEN / golden).read_text()


def test_classify_report_contents(capsys):
    run(["classify", "--catalog", "cuboctahedron"])
    out = capsys.readouterr().out
    for needle in ("B3", "2_{0,1}", "{3|4, 4}", "|Gamma| = 48"):
        assert needle in out


def test_growth_line(capsys):
    run(["tiling", "growth", "--n", "1"])
    assert capsys.readouterr().out.splitlines()[0] == "n=1 a=0 b=0 c=20 total=20"


def test_validate_lists_diamond(capsys, monkeypatch):
    monkeypatch.chdir(ROOT)
    assert run(["validate", "tests/data/nonsense.json"]) == 1
    assert "diamond" in capsys.readouterr().out


def test_deterministic_across_processes():
    argv = [sys.executable, "-m", "twoorbit.cli", "analyze", "--catalog", "rhombic-dodecahedron",
            "--format", "json"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b
    assert json.loads(a)["class_I"] == [1, 2]


def test_catalog_emit_round_trips(capsys):
    assert run(["catalog", "emit", "icosahedron"]) == 0
    L = FaceLattice.from_json(capsys.readouterr().out)
    assert are_isomorphic(L, make("icosahedron"))


def test_catalog_list(capsys):
    run(["catalog", "list"])
    out = capsys.readouterr().out.split()
    assert "cuboctahedron" in out and "polygon:N" in out


def test_quotient_emit_is_json(capsys):
    assert run(["tiling", "quotient", "--family", "rhombille", "--emit"]) == 0
    assert FaceLattice.from_json(capsys.readouterr().out).f_vector() == (27, 54, 27)


@pytest.mark.parametrize("text,needle", [
    ("{", "malformed JSON"),
    ('{"rank": 2, "faces": []}', "missing field 'covers'"),
    ('{"rank": 2, "faces": [{"id": "a", "rank": 0}], "covers": [["a", "q"]]}', "unknown face"),
])
def test_input_errors_exit_1(tmp_path, capsys, text, needle):
    p = tmp_path / "bad.json"
    p.write_text(text)
    assert run(["analyze", str(p)]) == 1
    assert needle in capsys.readouterr().err


def test_missing_file_exit_1(capsys):
    assert run(["validate", "/nonexistent/lattice.json"]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_wrong_class_exit_1(capsys):
    assert run(["classify", "--catalog", "polygon:4"]) == 0
    assert run(["tiling", "quotient", "--family", "trihexagonal", "--k", "2"]) == 1
    assert "k >= 3" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["frobnicate"], ["analyze", "--bogus"], [],
                                  ["tiling", "growth", "--n", "x"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_console_script_entry():
    r = subprocess.run([sys.executable, "-m", "twoorbit.cli", "tiling", "growth", "--n", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "total=760" in r.stdout
