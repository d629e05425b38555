import csv
import io
import subprocess
import sys

import pytest

from fillings.cli import BUDGET, OK, USAGE, run
from fillings.diagram import Diagram, boundary_word
from fillings.dps import NullSequence, replay
from fillings.presentation import preset


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wp(capsys):
    assert call(capsys, "wp", "--preset", "z2", "--word", "abAB") == (OK, "Trivial\n", "")
    code, out, _ = call(capsys, "wp", "--preset", "f2", "--word", "abAB")
    assert code == OK and out.strip() == "Nontrivial"


def test_area(capsys, tmp_path):
    path = tmp_path / "w.txt"
    code, out, _ = call(capsys, "area", "--preset", "z2", "--word", "aabbAABB",
                        "--max-len", "12", "--witness", str(path))
    assert code == OK and out.strip() == "4 (exact)"
    ns = NullSequence.loads(path.read_text())
    r = replay(ns, preset("z2"))
    assert r.null and r.relator_count == 4


def test_fl(capsys):
    code, out, _ = call(capsys, "fl", "--preset", "z2", "--word", "abAB")
    assert code == OK and out.strip() == "6 (exact)"


def test_measure(capsys, tmp_path):
    path = tmp_path / "d.txt"
    code, out, _ = call(capsys, "idiam", "--preset", "z2", "--word", "aabbAABB",
                        "--witness", str(path))
    assert code == OK and out.startswith("4")
    assert boundary_word(Diagram.loads(path.read_text())) == "aabbAABB"


def test_table(capsys, tmp_path):
    path = tmp_path / "t.csv"
    code, _, _ = call(capsys, "table", "--preset", "z2", "--n", "6", "--out", str(path))
    assert code == OK
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    assert {"n": "4", "measure": "area", "value": "1"}.items() <= \
        next(r for r in rows if r["n"] == "4" and r["measure"] == "area").items()


def test_table_deterministic(capsys):
    a = call(capsys, "table", "--preset", "z2", "--n", "4")
    b = call(capsys, "table", "--preset", "z2", "--n", "4", "--jobs", "2")
    assert a == b


def test_comb_check(capsys):
    code, out, _ = call(capsys, "comb-check", "--preset", "z2", "--kind", "zm", "--radius", "3")
    assert code == OK and "syncK=2" in out


def test_h3_and_compress(capsys, tmp_path):
    path = tmp_path / "h.txt"
    code, _, err = call(capsys, "compress", "--s", "16", "--n", "4", "--out", str(path))
    assert code == OK and "relatorCount" in err
    r = replay(NullSequence.loads(path.read_text()), preset("h3"))
    assert r.valid and r.words[-1] == "XXXXYYYYxxxxyyyy"
    code, _, _ = call(capsys, "h3-fill", "--word", "xyXYZ", "--out", str(path))
    assert code == OK
    assert replay(NullSequence.loads(path.read_text()), preset("h3")).null


def test_family(capsys, tmp_path):
    path = tmp_path / "g.txt"
    code, out, _ = call(capsys, "family", "--gamma", "2", "--out", str(path))
    assert code == OK and out.startswith("n,")
    assert Diagram.loads(path.read_text()).euler() == 2


def test_delta_probe(capsys):
    code, out, _ = call(capsys, "delta-probe", "--preset", "f2", "--radius", "2")
    assert code == OK and "four_point_delta=0" in out


@pytest.mark.parametrize("argv", [
    ["area", "--preset", "nosuch", "--word", "ab"],
    ["area", "--preset", "z2", "--word", "ab"],
    ["area", "--preset", "z2", "--word", "aq"],
    ["table", "--preset", "z2", "--n", "-1"],
    ["bogus"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == USAGE and err


def test_budget_exit(capsys):
    code, out, _ = call(capsys, "area", "--preset", "z2", "--word", "aabbAABB",
                        "--max-len", "8", "--max-states", "20")
    assert code in (OK, BUDGET)
    if code == BUDGET:
        assert "Unknown" in out or "upper bound" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "fillings", "wp", "--preset", "z2",
                        "--word", "abAB"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "Trivial"
