from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from wlsolve.cli import main
from wlsolve.problem import (
    ProblemError,
    dump_problem,
    fixture_names,
    fixture_path,
    load_problem,
    parse_problem,
)

from reference_data import GREATEST_FIXED, PREORDER_AT_3_5


def _canon(rows):
    from fractions import Fraction

    return [[Fraction(v) for v in row] for row in rows]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bundled_fixtures_present():
    assert set(fixture_names()) >= {"six_node_network", "three_node_counterexample"}


@pytest.mark.parametrize("name", ["six_node_network", "three_node_counterexample"])
def test_problem_round_trip(name, tmp_path):
    problem = load_problem(fixture_path(name))
    path = tmp_path / "copy.json"
    path.write_text(dump_problem(problem))
    again = load_problem(path)
    assert again == problem
    assert list(again.family.labels) == list(problem.family.labels)


def test_finite_lattice_problem_round_trip(tmp_path):
    obj = {
        "lattice": {"chain": 3, "product": "lukasiewicz"},
        "universe": ["a", "b"],
        "family": {"B": [["1", "1/2"], ["0", "1"]], "A": [["0", "0"], ["1/2", "1"]]},
    }
    problem = parse_problem(obj)
    path = tmp_path / "p.json"
    path.write_text(dump_problem(problem))
    assert load_problem(path) == problem
    assert load_problem(path).family.labels == ("B", "A")


def test_solve_writes_report(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "solve", "--input", str(fixture_path("six_node_network")), "--degree", "4/5",
                     "--x0", "universal", "--output", str(out))
    assert code == 0
    report = json.loads(out.read_text())
    assert report["status"] == "converged" and report["iterations"] == 3
    assert report["kind"] == "wls3" and report["degree"] == "4/5"
    assert _canon(report["relation"]) == _canon(GREATEST_FIXED)
    assert report["relation"][4][4] == "1/1"


def test_solve_preorder_trace(capsys):
    code, out, _ = run(capsys, "solve-preorder", "--input", str(fixture_path("six_node_network")),
                       "--degree", "4/5", "--trace")
    report = json.loads(out)
    assert code == 0 and report["equality_degrees"] == ["2/5", "50/81", "5/8", "8/9"]
    assert len(report["trace"]) == 5


def test_solve_equivalence(capsys):
    code, out, _ = run(capsys, "solve-equivalence", "--input", str(fixture_path("six_node_network")),
                       "--degree", "1/2")
    assert code == 0 and json.loads(out)["status"] == "converged"


def test_degree_command(capsys):
    code, out, _ = run(capsys, "degree", "--input", str(fixture_path("three_node_counterexample")),
                       "--relation", "X0")
    assert code == 0 and out.strip() == "1/2"
    code, out, _ = run(capsys, "degree", "--input", str(fixture_path("three_node_counterexample")),
                       "--relation", "X1", "--kind", "6")
    assert code == 0 and out.strip() == "3/4"


def test_aggregate_command(capsys):
    code, out, _ = run(capsys, "aggregate", "--input", str(fixture_path("six_node_network")), "--degree", "3/5")
    result = json.loads(out)
    assert code == 0
    assert [b["name"] for b in result["factor"]["blocks"]] == ["n1", "n2+n4", "n3", "n5", "n6"]
    assert _canon(result["factor"]["preorder"]) == _canon(PREORDER_AT_3_5)


def test_cap_exit_code(capsys):
    code, out, _ = run(capsys, "aggregate", "--input", str(fixture_path("six_node_network")),
                       "--degree", "1", "--max-iter", "50")
    assert code == 2 and json.loads(out)["factor"] is None
    code, out, _ = run(capsys, "solve", "--input", str(fixture_path("six_node_network")),
                       "--degree", "1/1", "--max-iter", "50")
    assert code == 2 and json.loads(out)["status"] == "iteration_cap_reached"


def test_non_square_matrix_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"lattice": "product", "universe": ["a", "b"],
                               "family": {"R": [["1", "0"], ["0", "1"], ["1", "1"]]}}))
    code, _, err = run(capsys, "solve", "--input", str(bad), "--degree", "1/2")
    assert code == 1 and "2x2" in err


def test_non_preorder_bound_exit_code(capsys):
    code, _, err = run(capsys, "solve-preorder", "--input", str(fixture_path("three_node_counterexample")),
                       "--degree", "3/4", "--x0", "R1")
    assert code == 1 and "preorder" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--input", "/nonexistent.json", "--degree", "1/2"],
        ["degree", "--input", "FIX", "--relation", "nothing"],
        ["solve", "--input", "FIX", "--degree", "7/5"],
        ["solve", "--input", "FIX", "--degree", "1/2", "--x0", "missing"],
    ],
)
def test_input_errors(capsys, argv):
    argv = [str(fixture_path("three_node_counterexample")) if a == "FIX" else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_malformed_problems():
    with pytest.raises(ProblemError):
        parse_problem({"lattice": "product", "universe": ["a"]})
    with pytest.raises(ProblemError):
        parse_problem({"lattice": "nope", "universe": ["a"], "family": {}})
    with pytest.raises(ProblemError):
        parse_problem({"lattice": "product", "universe": ["a"], "family": {"R": [["2"]]}})


def test_usage_errors():
    with pytest.raises(SystemExit):
        main(["solve", "--input", "x", "--degree", "1", "--max-iter", "0"])
    with pytest.raises(SystemExit):
        main(["solve", "--input", "x", "--degree", "1", "--kind", "wls9"])
    with pytest.raises(SystemExit):
        main(["oracle-verify", "--levels", "9"])


def test_oracle_verify_boolean(capsys):
    code, out, _ = run(capsys, "oracle-verify", "--lattice", "boolean")
    assert code == 0 and out.strip().endswith("PASS")


def test_oracle_verify_sample(capsys):
    code, out, _ = run(capsys, "oracle-verify", "--families", "5", "--seed", "2")
    assert code == 0 and "families=5" in out


def test_oracle_verify_budget(capsys):
    code, _, err = run(capsys, "oracle-verify", "--nodes", "4")
    assert code == 1 and "budget" in err


def test_console_entry_point():
    exe = shutil.which("wlsolve")
    cmd = [exe] if exe else [sys.executable, "-m", "wlsolve"]
    proc = subprocess.run(
        cmd + ["degree", "--input", str(fixture_path("three_node_counterexample")), "--relation", "X1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3/4"
