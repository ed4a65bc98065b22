import json

import pytest

from tq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_vanishing_field(capsys):
    code, out, _ = run(capsys, "compute", "--d1", "5", "--d2", "13")
    assert code == 0
    assert "vanishes" in out
    assert "full decomposition" in out


def test_compute_inadmissible(capsys):
    code, out, _ = run(capsys, "compute", "--d1", "2", "--d2", "5")
    assert code == 2
    assert "inadmissible" in out


def test_compute_nonzero(capsys):
    code, out, _ = run(capsys, "compute", "--d1", "3", "--d2", "11")
    assert code == 3
    assert "nonzero" in out


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--d1", "5", "--d2", "13", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "vanishes"
    assert data["torsion"] == 1
    assert data["ts_rep"]["1"] == "65/48"


def test_compute_options(capsys):
    code, out, _ = run(capsys, "compute", "--d1", "5", "--d2", "13",
                       "--m", "2", "--sign", "minus", "--extra-s", "3,7")
    assert code == 0
    assert "3" in out  # extra prime shows up in the S list


def test_compute_input_error(capsys):
    code, _, err = run(capsys, "compute", "--d1", "4", "--d2", "3")
    assert code == 4
    assert "input error" in err


def test_compute_imaginary_requires_flag(capsys):
    code, _, err = run(capsys, "compute", "--d1", "-3", "--d2", "5")
    assert code == 4
    code, out, _ = run(capsys, "compute", "--d1", "-3", "--d2", "5",
                       "--allow-imaginary")
    assert code in (0, 3)


def test_sweep_text_and_json(capsys):
    code, out, _ = run(capsys, "sweep", "--max", "15")
    assert "pairs scanned" in out
    code_json, out_json, _ = run(capsys, "sweep", "--max", "15", "--json")
    data = json.loads(out_json)
    assert data["dmax"] == 15
    assert sum(data["counts"].values()) == data["n_fields"]


def test_sweep_surfaces_nonzero_fields(capsys):
    code, out, _ = run(capsys, "sweep", "--max", "20")
    assert code == 3
    assert "NONZERO TORSION FIELDS" in out
    assert "d1 = 3, d2 = 11" in out


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 6


def test_analytic_ratio_command(capsys):
    code, out, _ = run(capsys, "lemma38", "--conductor-max", "30",
                       "--tol", "1e-8")
    assert code == 0
    assert "0 failures" in out
