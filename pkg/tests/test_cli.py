import json
from math import sqrt

import pytest

from linkgap.cli import main
from linkgap.report import dumps

from conftest import BOWTIE, OCTAHEDRON, TORUS7


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write_complex(tmp_path):
    def write(tops, name="cx"):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps({"name": name, "maximal_simplices": tops}))
        return str(path)
    return write


def test_validate(capsys, write_complex):
    code, out, _ = run(capsys, "validate", write_complex(OCTAHEDRON))
    assert code == 0 and "OK" in out
    code, _, err = run(capsys, "validate", write_complex([[0, 1, 2], [2, 3]]))
    assert code == 2 and "NonPure" in err
    code, out, _ = run(capsys, "validate", write_complex(BOWTIE))
    assert code == 1 and "disconnected link at (0,)" in out


def test_parse_and_io_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "validate", str(bad))[0] == 2
    bad.write_text('{"maximal_simplices": [[0, "a"]]}')
    assert run(capsys, "validate", str(bad))[0] == 2
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 3
    assert run(capsys, "check", "octahedron", "--criterion", "nope")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_check_octahedron(capsys):
    code, out, _ = run(capsys, "check", "octahedron", "--criterion", "zuk", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert all(a["margins"]["sum"] == 1.0 for a in doc["per_simplex"])
    assert len(doc["per_simplex"]) == 12
    assert run(capsys, "check", "octahedron", "--criterion", "thm1")[0] == 0
    assert run(capsys, "check", "octahedron", "--criterion", "bs", "--eps", "0.4")[0] == 0
    assert run(capsys, "check", "octahedron", "--criterion", "bs", "--eps", "0.6")[0] == 1


@pytest.mark.parametrize("tops", [OCTAHEDRON, TORUS7, [[0, 1, 2]], [[0, 1, 2], [0, 1, 3]]])
def test_general_agrees_with_thm1(capsys, write_complex, tops):
    path = write_complex(tops)
    thm1 = run(capsys, "check", path, "--criterion", "thm1")[0]
    general = run(capsys, "check", path, "--criterion", "general", "--k", "1", "--l", "2")[0]
    assert thm1 == general


def test_general_degenerate_is_not_applicable(capsys, write_complex):
    path = write_complex([[0, 1, 2, 3]])
    code, out, _ = run(capsys, "check", path, "--criterion", "general", "--k", "1", "--l", "3")
    assert code == 4 and "NOT APPLICABLE" in out
    code, _, _ = run(capsys, "check", path, "--criterion", "general", "--k", "1", "--l", "3",
                     "--extension")
    assert code in (0, 1)


def test_check_disconnected_and_wrong_dimension(capsys, write_complex):
    assert run(capsys, "check", write_complex(BOWTIE), "--criterion", "zuk")[0] == 4
    assert run(capsys, "check", write_complex([[0, 1, 2, 3]]), "--criterion", "zuk")[0] == 2


def test_check_lyons_builtin(capsys):
    assert run(capsys, "check", "lyons", "--criterion", "zuk")[0] == 1
    assert run(capsys, "check", "lyons", "--criterion", "thm1")[0] == 0
    assert run(capsys, "check", "lyons", "--criterion", "general", "--eps", "0.1")[0] == 0
    assert run(capsys, "check", "lyons", "--criterion", "bs", "--eps", "1e-6")[0] == 1


def test_thm2(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "octahedron", "--criterion", "thm2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["params"]["estimator"] == "oracle"
    table = tmp_path / "cos.json"
    table.write_text(json.dumps({str(v): 0.5 for v in range(3)}))
    assert run(capsys, "check", "triangle", "--criterion", "thm2", "--cos-table", str(table))[0] == 1
    table.write_text(json.dumps({str(v): 0.4 for v in range(3)}))
    assert run(capsys, "check", "triangle", "--criterion", "thm2", "--cos-table", str(table))[0] == 0
    code, out, _ = run(capsys, "check", "octahedron", "--criterion", "thm2",
                       "--estimator", "estimate", "--restarts", "10")
    assert code == 0 and "lower bound" in out


def test_polygon(capsys):
    code, out, _ = run(capsys, "polygon", "--m", "6", "--s", "5", "--t", "5")
    assert code == 0
    assert "lambda = 0.354502776" in out
    assert "lambda_bar = -0.145497224" in out
    code, out, _ = run(capsys, "polygon", "--m", "2", "--s", "9", "--t", "3", "--format", "json")
    assert code == 0 and json.loads(out)["lambda"] == 1.0
    assert run(capsys, "polygon", "--m", "5", "--s", "2")[0] == 2
    assert run(capsys, "polygon", "--m", "3", "--s", "2", "--t", "3")[0] == 2


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--labels", "2,8,8", "--qmax", "20", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and (doc["min_q_thm1"], doc["min_q_zuk"]) == (8, 12)
    code, out, _ = run(capsys, "scan", "--labels", "2,3,6", "--qmax", "10")
    row5 = next(line for line in out.splitlines() if line.strip().startswith("5 "))
    assert row5.split()[-2:] == ["FAIL", "PASS"]
    assert run(capsys, "scan", "--labels", "2,5,6", "--qmax", "10")[0] == 2
    assert run(capsys, "scan", "--labels", "x", "--qmax", "10")[0] == 2


def test_lyons(capsys):
    code, out, _ = run(capsys, "lyons", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "PASS"
    r5, r15 = sqrt(5), sqrt(15)
    assert doc["lambdas"] == pytest.approx([1.0, 1 - r5 / 6, 1 - r15 / 6], abs=1e-8)
    assert doc["zuk_sum"] == pytest.approx(1 - (r5 + r15) / 6, abs=1e-8)
    assert not doc["zuk_passed"]
    code, out, _ = run(capsys, "lyons")
    assert "verdict: PASS" in out


@pytest.mark.parametrize("argv", [
    ("lyons",),
    ("check", "octahedron", "--criterion", "thm1"),
    ("check", "octahedron", "--criterion", "thm2", "--estimator", "estimate",
     "--restarts", "5", "--seed", "3"),
    ("scan", "--labels", "3,4,6", "--qmax", "12"),
    ("validate", "octahedron"),
])
def test_json_round_trip_and_determinism(capsys, argv):
    first = run(capsys, *argv, "--format", "json")
    second = run(capsys, *argv, "--format", "json")
    assert first == second
    assert dumps(json.loads(first[1])) == first[1]
