import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from polycomplete import GF, QQ, Poly, PolyMatrix, RatFunc, RatMatrix
from polycomplete.cli import main
from polycomplete.completion import PrescribedData, check
from polycomplete.documents import (
    DocumentError,
    matrix_from_doc,
    matrix_to_doc,
    parse_poly_expr,
    structure_from_doc,
    structure_to_doc,
    target_from_doc,
    target_to_doc,
    verdict_from_doc,
    verdict_to_doc,
)
from polycomplete.oracle import random_instance, random_rational_instance
from polycomplete.structure import complete_structural_data

s = Poly.s(QQ)


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


@pytest.fixture
def ex_files(tmp_path):
    m = write(tmp_path, "P.json", {"field": "Q", "entries": [[["0", "1"], ["0"]]]})
    t = write(tmp_path, "T.json", {"mode": "inf", "z": 1, "x": 1, "orders": [-1, 1]})
    return m, t, tmp_path


def test_poly_expr():
    assert parse_poly_expr("s^2 - 2*s + 1/3") == Poly([Poly.constant(1).coeffs[0] / 3, -2, 1])
    assert parse_poly_expr("2s", GF(5)) == Poly([0, 2], GF(5))
    with pytest.raises(DocumentError):
        parse_poly_expr("s^^2")


@pytest.mark.parametrize("seed", range(10))
def test_matrix_round_trip(seed):
    for M in (random_instance(QQ, 2, 3, 2, seed), random_rational_instance(GF(5), 2, 2, 1, seed)):
        back = matrix_from_doc(json.loads(json.dumps(matrix_to_doc(M))))
        assert back.as_rat() == M.as_rat()


@pytest.mark.parametrize("seed", range(10))
def test_structure_round_trip(seed):
    d = complete_structural_data(random_rational_instance(GF(5), 2, 3, 1, seed))
    assert structure_from_doc(json.loads(json.dumps(structure_to_doc(d)))) == d


def test_target_and_verdict_round_trip():
    src = complete_structural_data(PolyMatrix([[s, Poly.zero(QQ)]]))
    for t in (
        PrescribedData("inf", 1, 1, orders=(-1, 1)),
        PrescribedData("fin-first-order", 1, 1, num=(s, s), orders=(-1,)),
        PrescribedData("complete", 1, 1, num=(s, s), orders=(-1, -1), cols=(), rows=()),
    ):
        assert target_from_doc(json.loads(json.dumps(target_to_doc(t))), QQ) == t
        v = check(src, t, "rational" if t.mode != "complete" else "polynomial")
        back = verdict_from_doc(json.loads(json.dumps(verdict_to_doc(v))))
        assert back == v and back.sequences == v.sequences


def test_cli_structure(ex_files, capsys):
    m, _, _ = ex_files
    assert main(["structure", m, "--output", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["rank"], doc["eta"], doc["phi"], doc["orders"], doc["cols"], doc["rows"]) == (
        1, ["s"], ["1"], [-1], [0], [])


def test_cli_identity(tmp_path, capsys):
    m = write(tmp_path, "I.json", {"field": {"GF": 3}, "entries": [[["1"], ["0"]], [["0"], ["1"]]]})
    assert main(["structure", m, "--output", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["eta"] == ["1", "1"] and doc["orders"] == [0, 0] and doc["cols"] == []


def test_cli_check_example(ex_files, capsys):
    m, t, _ = ex_files
    assert main(["check", m, t, "--ring", "poly", "--explain"]) == 1
    out = capsys.readouterr().out
    assert "FAIL inf-max" in out and "[1 vs 0]" in out
    assert main(["check", m, t, "--ring", "rational"]) == 0
    assert main(["inf", m, t, "--ring", "rational", "--output", "json"]) == 0
    assert json.loads(capsys.readouterr().out.split("\n", 1)[1])["status"] == "feasible"


def test_cli_z0_and_hypothesis(ex_files):
    m, _, tmp = ex_files
    t0 = write(tmp, "T0.json", {"mode": "complete", "z": 0, "x": 0, "num": ["s"], "orders": [-1],
                                "cols": [0], "rows": []})
    assert main(["check", m, t0]) == 0
    th = write(tmp, "TH.json", {"mode": "inf", "z": 1, "x": 2, "orders": [-1, 0, 0]})
    assert main(["check", m, th]) == 2


def test_cli_errors(ex_files, tmp_path, capsys):
    m, t, _ = ex_files
    bad = write(tmp_path, "bad.json", "{\n  \"field\": \"Q\",\n  oops\n}")
    assert main(["structure", bad]) == 65
    assert "bad.json:3:" in capsys.readouterr().err
    assert main(["structure", str(tmp_path / "missing.json")]) == 66
    assert main(["nonsense"]) == 64
    assert main(["check", m, t, "--mode", "fin"]) == 65
    dims = write(tmp_path, "D.json", {"mode": "inf", "z": 1, "x": 1, "orders": [-1]})
    assert main(["check", m, dims]) == 65


def test_cli_oracle(capsys):
    assert main(["oracle"]) == 0
    first = capsys.readouterr().out
    assert "disagreements=0" in first
    assert main(["oracle", "--budget", "1"]) == 70
    assert main(["oracle", "--seed", "3", "--samples", "2", "--field", "3", "--max-degree", "1"]) == 0
    a = capsys.readouterr().out
    main(["oracle", "--seed", "3", "--samples", "2", "--field", "3", "--max-degree", "1"])
    assert capsys.readouterr().out == a


def test_module_entry_point(ex_files):
    m, t, _ = ex_files
    r = subprocess.run([sys.executable, "-m", "polycomplete", "check", m, t], capture_output=True, text=True)
    assert r.returncode == 1 and "infeasible" in r.stdout
