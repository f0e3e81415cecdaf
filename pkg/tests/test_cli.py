import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from extwins.cli import main
from extwins.data import __file__ as data_init
from extwins.hirzebruch.formulas import twin_residual

DATA = Path(data_init).parent


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "extwins", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def rows(csv_text):
    lines = [ln for ln in csv_text.splitlines() if not ln.startswith("#")]
    header = lines[0].split(",")
    return [dict(zip(header, ln.split(","))) for ln in lines[1:]]


def test_scan_is_deterministic():
    args = ("hirzebruch", "scan", "--s", "2", "--range", "1/6:5/6", "--step", "1/6")
    first, second = run(*args), run(*args)
    assert first[0] == 0 and first == second


def test_scan_rows_satisfy_twin_equation():
    code, out, _ = run("hirzebruch", "scan", "--s", "2", "--range", "1/6:5/6", "--step", "1/6")
    assert code == 0
    table = rows(out)
    assert table
    for r in table:
        assert r["s_cert"] == "exact" and r["x_cert"] == "exact"
        if r["a_cert"] == r["b_cert"] == "exact":
            assert twin_residual(2, Fraction(r["x"]), Fraction(r["a"]), Fraction(r["b"])) == 0
        else:
            assert r["residual_cert"].startswith("interval±")


def test_scan_includes_cscs_root_at_half():
    _, out, _ = run("hirzebruch", "scan", "--s", "2", "--range", "1/2:1/2")
    cscs = [r for r in rows(out) if r["cscs"] == "true"]
    assert len(cscs) == 1
    assert abs(float(cscs[0]["a"]) - (4 - 13**0.5) / 3) < 1e-12
    half = float(cscs[0]["a_cert"].removeprefix("interval±"))
    assert half <= 1e-12


def test_empty_range_is_empty_report():
    code, out, _ = run("hirzebruch", "scan", "--s", "2", "--range", "1/2:1/3")
    assert code == 0 and rows(out) == []


@pytest.mark.parametrize("name, verdict", [("hexagon", "# only-diagonal: no twin"),
                                           ("simplex", "# empty system: full Sasaki cone")])
def test_polytope_verdicts(name, verdict):
    code, out, _ = run("polytope", "check", str(DATA / f"{name}.txt"))
    assert code == 0 and verdict in out.splitlines()


def test_polytope_square_two_lines():
    _, out, _ = run("polytope", "check", str(DATA / "square.txt"))
    assert sum(ln.startswith("# solution line") for ln in out.splitlines()) == 2


def test_verify_selectors():
    code, out, _ = run("verify", "s5")
    assert code == 0
    assert [r["item"] for r in rows(out)] == ["9", "10"]
    assert all(r["passed"] == "true" for r in rows(out))


def test_usage_errors_exit_2(tmp_path):
    assert run("verify", "s9")[0] == 2
    assert run("hirzebruch", "twin", "--s", "2", "--x", "3/2", "--a", "0")[0] == 2
    assert run("hirzebruch", "twin", "--s", "2", "--x", "1/2")[0] == 2  # argparse
    bad = tmp_path / "bad.txt"
    bad.write_text("dimension: 2\nvertices:\n  0 zero\n")
    code, _, err = run("polytope", "check", str(bad))
    assert code == 2 and "bad.txt:3" in err


def test_json_mirrors_csv(tmp_path):
    out = tmp_path / "r.json"
    assert main(["quad", "cscs-family", "--alpha1", "1", "--alpha2", "2", "--C", "1",
                 "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["columns"][:2] == ["scal", "scal_cert"]
    assert doc["rows"][0]["scal"] == "36"
    assert doc["rows"][0]["both_cscs"] == "true"


def test_quad_twin_file(capsys):
    assert main(["quad", "twin", str(DATA / "calabi_cscs.txt")]) == 0
    table = rows(capsys.readouterr().out)
    assert (table[0]["lambda"], table[0]["c1"], table[0]["c2"]) == ("-2/3", "1", "0")


def test_quad_lebrun_no_cscs_below_threshold(capsys):
    assert main(["quad", "lebrun", "--alpha", "1", "--beta", "5"]) == 0
    out = capsys.readouterr().out
    assert "# no cscS weight (needs beta > 5 alpha)" in out


def test_timing_goes_to_stderr():
    code, out, err = run("genus", "join", "--w1", "11", "--w2", "9", "--l1", "1", "--timing")
    assert code == 0 and "elapsed" in err and "elapsed" not in out
    assert rows(out)[0]["x"] == "1/10"


def test_negative_rationals_as_values(capsys):
    assert main(["hirzebruch", "twin", "--s", "2", "--x", "1/3", "--a", "-1/4"]) == 0
    assert rows(capsys.readouterr().out)[0]["b"] == "23/85"
    assert main(["hirzebruch", "scan", "--s", "2", "--range", "1/2:1/2",
                 "--a-range", "-1/2:1/2", "--a-step", "1/2"]) == 0
    assert rows(capsys.readouterr().out)[0]["a"] == "-1/2"


def test_scan_merges_em_weight_into_grid():
    _, out, _ = run("hirzebruch", "scan", "--s", "2", "--range", "4/5:4/5")
    half = [r for r in rows(out) if r["a"] == "1/2"]
    assert len(half) == 1
    assert half[0]["em_a"] == half[0]["em_b"] == half[0]["bifurcation"] == "true"
