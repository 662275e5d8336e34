import json

import pytest

from conftest import REVERSIBLE_7
from coxc.cli import run
from coxc.coxeter import INF, CoxeterMatrix
from coxc.gates import format_gate_set, quantum_generators, reversible_generators
from coxc.sat import Circuit, compile_formula, parse_dimacs


@pytest.fixture
def files(tmp_path):
    (tmp_path / "rev.gates").write_text(format_gate_set(reversible_generators(7)))
    (tmp_path / "q.gates").write_text(format_gate_set(quantum_generators(4)))
    (tmp_path / "scc.gates").write_text("SWAP 1 2\nCNOT 1 2\nCNOT 2 1\n")
    (tmp_path / "f.cnf").write_text("p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n")
    (tmp_path / "one.cnf").write_text("p cnf 3 1\n1 2 3 0\n")
    return tmp_path


def test_extract_reversible(files):
    out = files / "m.json"
    assert run(["extract-matrix", "--gates", str(files / "rev.gates"), "--lines", "7", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["matrix"] == REVERSIBLE_7
    assert data["labels"][0] == "SWAP_1_2"


def test_extract_quantum_writes_zero_for_infinity(files, capsys):
    assert run(["extract-matrix", "--gates", str(files / "q.gates"), "--lines", "4", "--quantum"]) == 0
    m = CoxeterMatrix.from_json(capsys.readouterr().out)
    assert m[0, 10] == INF


def test_reduce(files, capsys):
    m = files / "m.json"
    run(["extract-matrix", "--gates", str(files / "rev.gates"), "--lines", "7", "--out", str(m)])
    assert run(["reduce", "--matrix", str(m), "--word", "1 1"]) == 0
    assert capsys.readouterr().out == "\n"
    assert run(["reduce", "--matrix", str(m), "--word", "1 2 1 2"]) == 0
    assert capsys.readouterr().out.strip() == "2 1"
    assert run(["reduce", "--matrix", str(m), "--word", "SWAP_1_2 NOT_1"]) == 0
    assert capsys.readouterr().out.strip() == "1 7"


def test_reduce_with_relators(files, capsys):
    m = files / "scc.json"
    rel = files / "scc.rel"
    run(["extract-matrix", "--gates", str(files / "scc.gates"), "--lines", "2", "--out", str(m)])
    assert run(["mine", "--gates", str(files / "scc.gates"), "--lines", "2", "--max-len", "4", "--out", str(rel)]) == 0
    assert rel.read_text().startswith("# relators mined against")
    assert run(["reduce", "--matrix", str(m), "--word", "1 2 3 2"]) == 0
    assert capsys.readouterr().out.strip() == "1 2 3 2"
    assert run(["reduce", "--matrix", str(m), "--word", "1 2 3 2", "--relators", str(rel)]) == 0
    assert capsys.readouterr().out == "\n"


def test_compile_and_revid(files, capsys):
    circ = files / "c.circ"
    assert run(["compile-sat", str(files / "f.cnf"), "--clean", "--out", str(circ)]) == 0
    f = parse_dimacs((files / "f.cnf").read_text())
    assert Circuit.from_text(circ.read_text()) == compile_formula(f, clean=True)
    assert run(["revid", str(circ)]) == 0
    out = capsys.readouterr().out
    witness = int(out.split("witness")[1])
    assert f.satisfied_by(witness)
    assert run(["compile-sat", str(files / "f.cnf"), "--parallel"]) == 0
    assert capsys.readouterr().out == compile_formula(f, "parallel").to_text()


def test_revid_identity_and_cap(files, capsys):
    circ = files / "id.circ"
    circ.write_text("lines 3 target - ancilla -\nTOF 1 2 3\nTOF 1 2 3\n")
    assert run(["revid", str(circ)]) == 0
    assert "identity (stage 1)" in capsys.readouterr().out
    circ.write_text("lines 3 target - ancilla -\nCNOT 1 2\nCNOT 2 3\n")
    assert run(["revid", str(circ), "--cap", "2"]) == 3


def test_dag_and_split(files, capsys):
    circ = files / "c.circ"
    run(["compile-sat", str(files / "one.cnf"), "--out", str(circ)])
    assert run(["dag", str(circ)]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("digraph dependence {")
    assert '"1" [label="1:NOT_1"];' in dot
    assert run(["split", str(circ), "--middle-third"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["prefix"]) + len(data["suffix"]) == 12


def test_cheeger(files, capsys):
    m = files / "m.json"
    run(["extract-matrix", "--gates", str(files / "rev.gates"), "--lines", "7", "--out", str(m)])
    assert run(["cheeger", str(m), "--exact"]) == 0
    exact = json.loads(capsys.readouterr().out)
    assert run(["cheeger", str(m), "--local"]) == 0
    local = json.loads(capsys.readouterr().out)
    assert exact["mode"] == "exact" and local["mode"] == "local"
    from fractions import Fraction

    assert Fraction(local["h"]) >= Fraction(exact["h"])


def test_swaptest(files, capsys):
    assert run(["swaptest", str(files / "one.cnf"), "--k", "2", "--amplify", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["PI"] == "1/8"
    assert data["prob_one"] == pytest.approx(4225 / 16384, abs=1e-9)


def test_mine_budget_exit_code(files):
    assert run(["mine", "--gates", str(files / "scc.gates"), "--lines", "2", "--budget", "3"]) == 3


def test_error_exit_codes(files, capsys):
    assert run([]) == 1
    assert run(["bogus"]) == 1
    assert run(["reduce", "--matrix", str(files / "missing.json"), "--word", "1"]) == 2
    bad = files / "bad.cnf"
    bad.write_text("p cnf 3 1\n1 2 0\n")
    assert run(["compile-sat", str(bad)]) == 2
    big = files / "big.cnf"
    big.write_text("p cnf 4 2\n1 2 3 0\n2 3 4 0\n")
    assert run(["swaptest", str(big), "--k", "1"]) == 3


def test_help_documents_formats(capsys):
    assert run(["--help"]) == 0
    text = capsys.readouterr().out
    assert "infinite order is written 0" in text
    assert "COXC_THREADS" in text
