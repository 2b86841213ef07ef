import json
import subprocess
import sys

import pytest

from chromlc.bounds import RootBoundReport
from chromlc.cli import main
from chromlc.concavity import LogConcavityReport, SeymourReport
from chromlc.graph import complete_graph, cycle_graph, empty_graph, random_graph, serialize_graph
from chromlc.polynomial import Polynomial


@pytest.fixture
def gfile(tmp_path):
    def write(g, name="g.txt"):
        path = tmp_path / name
        path.write_bytes(serialize_graph(g))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_text_and_json(capsys, gfile):
    path = gfile(complete_graph(3))
    assert run(capsys, "poly", path) == (0, "q^3 - 3q^2 + 2q\n", "")
    code, out, _ = run(capsys, "poly", "--input", path, "--format", "json")
    assert code == 0 and json.loads(out) == ["0", "2", "-3", "1"]
    assert Polynomial.from_json(out) == Polynomial([0, 2, -3, 1])


def test_poly_empty_graph(capsys, gfile):
    code, out, _ = run(capsys, "poly", gfile(empty_graph(0)))
    assert (code, out) == (0, "1\n")


def test_poly_budget(capsys, gfile):
    code, _, err = run(capsys, "poly", gfile(random_graph(30, 0.8, 1)))
    assert code == 3 and "budget" in err


def test_poly_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 2 1\n0 5\n")
    code, _, err = run(capsys, "poly", str(bad))
    assert code == 2 and "line 2" in err


def test_roots(capsys, gfile, tmp_path):
    svg = tmp_path / "k3.svg"
    code, out, _ = run(capsys, "roots", gfile(complete_graph(3)), "--format", "json", "--svg", str(svg))
    d = json.loads(out)
    assert code == 0 and d["pass"]
    assert d["max_modulus"] == pytest.approx(2)
    assert d["bound"] == pytest.approx(13.815, abs=2e-3)
    assert RootBoundReport.from_dict(d).to_dict() == d
    assert svg.read_text().startswith("<svg")

    code, out, _ = run(capsys, "roots", gfile(cycle_graph(5)), "--format", "json")
    assert code == 0 and json.loads(out)["pass"]
    code, out, _ = run(capsys, "roots", gfile(empty_graph(4)), "--format", "json")
    assert code == 0 and json.loads(out)["max_modulus"] == 0


def test_roots_csv(capsys, gfile):
    code, out, _ = run(capsys, "roots", gfile(complete_graph(3)), "--format", "csv")
    assert out.splitlines()[0] == "re,im" and len(out.splitlines()) == 4


def test_logcc(capsys, gfile):
    code, out, _ = run(capsys, "logcc", gfile(complete_graph(3)), "--lo", "0", "--hi", "50",
                       "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["violations"] == [] and d["threshold_q0"] == 21
    assert LogConcavityReport.from_dict(d).to_dict() == d
    code, out, _ = run(capsys, "logcc", gfile(cycle_graph(4)), "--format", "json")
    assert code == 0 and json.loads(out)["violations"] == []
    code, _, _ = run(capsys, "logcc", gfile(cycle_graph(4)), "--lo", "5", "--hi", "1")
    assert code == 2


def test_seymour(capsys):
    code, out, _ = run(capsys, "seymour", "--n-lo", "1", "--n-hi", "1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and len(d["rows"]) == 1
    assert d["rows"][0]["bounds_hold"] == [True, True, True]
    assert SeymourReport.from_dict(d).to_dict() == d
    code, out, _ = run(capsys, "seymour", "--n-lo", "1", "--n-hi", "50", "--format", "json")
    assert json.loads(out)["n_star"] == 28
    assert run(capsys, "seymour", "--n-lo", "0")[0] == 2


def test_seymour_csv(capsys):
    code, out, _ = run(capsys, "seymour", "--n-hi", "3", "--format", "csv")
    assert out.splitlines()[0].split(",")[:4] == ["n", "p5", "p6", "p7"]
    assert out.splitlines()[1].split(",")[:4] == ["1", "1620", "7680", "26250"]


def test_modified(capsys):
    code, out, _ = run(capsys, "modified", "--n", "7", "--k-lo", "10", "--k-hi", "12", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["passed"] and len(d["identity"]) == 3
    assert run(capsys, "modified", "--n", "5")[0] == 2


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["K"]["F_at_2_5"] == pytest.approx(7.964, abs=1e-3) and d["K"]["value"] < 8
    assert d["K_star"]["value"] == pytest.approx(6.907, abs=1e-3) and d["K_star"]["value"] < 7
    code, out9, _ = run(capsys, "constants", "--tolerance", "1e-9", "--format", "json")
    d9 = json.loads(out9)
    assert d9["K"]["value"] == pytest.approx(d["K"]["value"], abs=1e-6)
    assert d9["K_star"]["value"] == pytest.approx(d["K_star"]["value"], abs=1e-6)
    with pytest.raises(SystemExit) as info:
        main(["constants", "--tolerance", "0"])
    assert info.value.code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "42", "--count", "20", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["passed"] and d["oracle_graphs"] == 20
    _, again, _ = run(capsys, "verify", "--seed", "42", "--count", "20", "--format", "json")
    assert again == out
    code, out, _ = run(capsys, "verify", "--count", "0", "--format", "json")
    assert code == 0 and json.loads(out)["oracle_graphs"] == 0


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as info:
        main(["poly", "--bogus"])
    assert info.value.code == 2


def test_module_entry_point(gfile):
    proc = subprocess.run(
        [sys.executable, "-m", "chromlc", "poly", gfile(cycle_graph(4))],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "q^4 - 4q^3 + 6q^2 - 3q\n"
