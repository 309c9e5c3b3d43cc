import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from conftest import wiring_and_config
from xorwire.cli import run
from xorwire.construct import W3_ROWS
from xorwire.gf2core import BitVector, WiringMatrix, parse, serialize
from xorwire.solver import solve
from xorwire.xnf import export_xnf, max_satisfiable, parse_xnf

W3 = WiringMatrix.from_rows(W3_ROWS)


@pytest.fixture
def w6_file(tmp_path):
    path = tmp_path / "w6.txt"
    assert run(["construct", "--family", "w6", "-o", str(path)]) == 0
    return path


class TestXnf:
    def test_w3(self):
        assert export_xnf(W3).splitlines() == ["p cnf 3 3", "x 1 3 0", "x 1 2 0", "x 2 3 0"]

    def test_identity(self):
        lines = export_xnf(WiringMatrix.identity(4)).splitlines()[1:]
        assert lines == [f"x {i} 0" for i in range(1, 5)]

    def test_negation(self):
        text = export_xnf(WiringMatrix.ones(2), BitVector.from_list([1, 0]))
        assert text.splitlines()[1:] == ["x -1 2 0", "x 1 2 0"]

    def test_parse_round(self):
        nvars, clauses = parse_xnf(export_xnf(W3))
        assert nvars == 3 and clauses == [[1, 3], [1, 2], [2, 3]]

    @settings(max_examples=80)
    @given(wiring_and_config(max_n=8))
    def test_max_sat_equals_solve(self, wc):
        W, c = wc
        assert max_satisfiable(export_xnf(W, c)) == solve(W, c).value


def test_construct_then_solve_2008(tmp_path, capsys):
    path = tmp_path / "m.txt"
    assert run(["construct", "--family", "mu2-star", "--n", "2008", "-o", str(path)]) == 0
    assert run(["solve", str(path)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "value 1340"


def test_solve_restricted_table(w6_file, capsys):
    assert run(["solve", str(w6_file), "--restrict", "1,2,4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "value 4"
    assert out[1] == "witness (1,1,0,0,0,0)"
    assert "(1,1,0,0,0,0) | (1,0,1,1,1,0) | 4" in out


def test_solve_json_and_initial(tmp_path, capsys):
    path = tmp_path / "pairs.txt"
    run(["construct", "--family", "nu-pairs", "--n", "8", "-o", str(path)])
    assert run(["solve", str(path), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 4
    assert run(["solve", str(path), "--initial", "zero"]) == 0
    assert capsys.readouterr().out.startswith("value 8")
    assert run(["solve", str(path), "--initial", "10000000", "--naive"]) == 0
    # the first pair can only show one lit bulb, the other three show two
    assert capsys.readouterr().out.startswith("value 7")


def test_file_solve_matches_memory(tmp_path, capsys):
    path = tmp_path / "r.txt"
    assert run(["random", "--n", "9", "--m", "3", "--seed", "42", "-o", str(path)]) == 0
    W, _ = parse(path.read_text())
    capsys.readouterr()
    run(["solve", str(path)])
    assert capsys.readouterr().out.splitlines()[0] == f"value {solve(W).value}"


def test_random_reproducible(capsys):
    run(["random", "--n", "12", "--m", "3", "--exact", "--seed", "18446744073709551615"])
    first = capsys.readouterr()
    run(["random", "--n", "12", "--m", "3", "--exact", "--seed", "18446744073709551615"])
    second = capsys.readouterr()
    assert first.out == second.out
    assert "seed 18446744073709551615" in first.err
    W, _ = parse(first.out)
    assert all(W.column_degree(j) == 3 for j in range(1, 13))


def test_light_and_pivot(tmp_path, capsys):
    path = tmp_path / "w3.txt"
    path.write_text(serialize(W3))
    assert run(["light", str(path)]) == 0
    assert capsys.readouterr().out.startswith("value 2")
    assert run(["pivot", str(path), "--vertex", "1"]) == 0
    P, _ = parse(capsys.readouterr().out)
    assert P.column(2) == W3.column(1)
    assert run(["pivot", str(path), "--vertex", "1", "--relative-to", "2"]) == 0
    assert parse(capsys.readouterr().out)[0] == W3


def test_export_formats(w6_file, capsys):
    assert run(["export", str(w6_file), "--format", "dot"]) == 0
    assert capsys.readouterr().out.count("->") == 12
    assert run(["export", str(w6_file), "--format", "xnf"]) == 0
    assert capsys.readouterr().out.startswith("p cnf 6 6")
    assert run(["export", str(w6_file), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["rows"][3] == "011111"


def test_enumerate_json(capsys):
    assert run(["enumerate", "--kind", "mu", "--n", "6", "--m", "3", "--exact", "--format", "json", "--jobs", "1"]) == 0
    (doc,) = json.loads(capsys.readouterr().out)
    assert (doc["kind"], doc["value"], doc["verdict"]) == ("mu*", 4, "match")


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("wiring 2\n1\n11\n")
    assert run(["solve", str(bad)]) == 2
    nodiag = tmp_path / "nodiag.txt"
    nodiag.write_text("wiring 2\n01\n11\n")
    assert run(["solve", str(nodiag)]) == 2
    assert "warning" in capsys.readouterr().err
    assert run(["enumerate", "--n", "9", "--m", "4", "--budget", "10"]) == 2
    assert run(["light", str(tmp_path / "missing.txt")]) == 2
    with pytest.raises(SystemExit) as exc:
        run(["solve"])
    assert exc.value.code == 2


def test_verify_small_exit_zero(capsys):
    assert run(["verify", "--max-n", "5", "--jobs", "1"]) == 0
    assert capsys.readouterr().out.rstrip().endswith("OK")


def test_module_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "xorwire", "construct", "--family", "w3"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == serialize(W3, BitVector.zeros(3))


def test_bench_runs(capsys):
    assert run(["bench", "--sizes", "6,30"]) == 0
    assert "mu2-star" in capsys.readouterr().out
