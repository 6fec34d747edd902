import json

import pytest

from cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_count_points(capsys):
    code, out = _run(capsys, "count-points", "--a", "0", "--b", "5", "--q", "7")
    assert code == 0
    assert json.loads(out.out)["count"] == 7


def test_split_prime(capsys):
    code, out = _run(capsys, "split-prime", "--d", "-3", "--p", "7", "--trace", "1")
    assert code == 0
    assert json.loads(out.out)["coordinates"] == [2, 3]


def test_split_prime_computes_the_trace(capsys):
    code, out = _run(capsys, "split-prime", "--d", "-3", "--p", "7")
    assert code == 0
    assert json.loads(out.out)["trace"] == -4


def test_torsion(capsys):
    code, out = _run(capsys, "torsion", "--n", "0", "--precision", "6")
    points = json.loads(out.out)["points"]
    assert code == 0
    assert len(points) == 7
    assert {p["x_residue"] for p in points[1:]} == {3, 5, 6}


def test_certify(capsys):
    code, out = _run(capsys, "certify", "--n", "0", "--x", "3", "--y", "5", "--precision", "12")
    data = json.loads(out.out)
    assert code == 0
    assert data["verdict"] in ("Good", "NotGood")
    assert data["x_valuation"] % 2 == 0
    assert data["stable"]
    if data["verdict"] == "Good":
        assert data["restricted_level"] == 6


@pytest.mark.parametrize("argv, code", [
    (["certify", "--n", "0", "--x", "0", "--y", "0"], 2),
    (["certify", "--n", "0", "--x", "0.5", "--y", "1"], 2),
    (["count-points", "--a", "0", "--b", "0", "--q", "7"], 2),
])
def test_input_errors_exit_with_two(capsys, argv, code):
    assert _run(capsys, *argv)[0] == code


def test_formula(capsys):
    code, out = _run(capsys, "formula", "--p", "7")
    data = json.loads(out.out)
    assert code == 0
    assert data["mismatches"] == []
    assert len(data["anomalous"]) == 1


def test_families(capsys):
    code, out = _run(capsys, "families")
    assert code == 0
    data = json.loads(out.out)
    assert all(f["anomalous"] for f in data["families"])
    assert data["gaussian"]["divisible"]


def test_filtration(capsys):
    code, out = _run(capsys, "filtration", "--n", "0", "--precision", "8")
    assert code == 0
    assert json.loads(out.out)["torsion_level"] == 1


def test_sweep_writes_report(tmp_path, capsys):
    path = tmp_path / "sweep.json"
    code, out = _run(
        capsys, "--log-level", "INFO", "sweep", "--from", "0", "--to", "0",
        "--height", "3", "--precision", "12", "--out", str(path),
    )
    assert code == 0
    assert "outcome" in out.out
    assert json.loads(path.read_text())["range"] == [0, 0]


def test_split_prime_class_one(capsys):
    code, out = _run(capsys, "split-prime", "--d", "-43", "--p", "11")
    data = json.loads(out.out)
    assert code == 0
    assert data["trace"] == -1
    assert data["count"] == 13
    assert data["coordinates"] == [0, 1]


def test_conventions(capsys):
    code, out = _run(capsys, "conventions")
    rows = json.loads(out.out)["conventions"]
    assert code == 0
    assert [row["D"] for row in rows] == [-43, -67, -163]
    assert all(row["matches"] for row in rows)
