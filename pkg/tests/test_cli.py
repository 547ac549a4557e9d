import json

import pytest

from pqsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_park(capsys):
    code, out, _ = run(capsys, "park", "3,5,1,1,11,8,8,2")
    assert code == 0
    assert out.strip() == "3,5,1,1,8,6,6,2"


def test_park_trace_json(capsys):
    code, out, _ = run(capsys, "park", "3,5,1,1,11,8,8,2", "--trace", "--json")
    data = json.loads(out)
    assert data["park"] == [3, 5, 1, 1, 8, 6, 6, 2]
    assert [r["pivot"] for r in data["trace"]] == [6, 6, 8]


def test_std(capsys):
    assert run(capsys, "std", "3132")[1].strip() == "3,1,4,2"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "ndpf", "--n", "3")
    assert out.split() == ["1,1,1", "1,1,2", "1,1,3", "1,2,2", "1,2,3"]
    data = json.loads(run(capsys, "--json", "enumerate", "pf", "--n", "3")[1])
    assert data["count"] == 16


def test_poset(capsys):
    lines = run(capsys, "poset", "--n", "3")[1].splitlines()
    assert "1,2,3 → 1,1,3" in lines
    assert "1,2,3 → 1,2,2" in lines


def test_eval(capsys):
    assert run(capsys, "eval", "F[2,1,1] ⊛ F[2,1,1]")[1].strip() == "F[3,1,1]"
    data = json.loads(run(capsys, "eval", "toBasis(P[1,2], R)", "--json")[1])
    assert data["value"] == {
        "basis": "R",
        "degree": 2,
        "terms": [{"index": [1, 1], "coeff": "1"}, {"index": [1, 2], "coeff": "1"}],
    }


def test_eval_project_prints_sym_forms(capsys):
    out = run(capsys, "eval", "project(P[1,1,2,3])")[1].splitlines()
    assert out == ["P[1,1,3,4]", "S-form: S[2,1,1]", "J-form: J(2)*J(1)*J(1)"]


@pytest.mark.parametrize(
    "argv",
    [("eval", "F[2,2]"), ("eval", "F[1] $"), ("park", "1,x"), ("enumerate", "pf", "--n", "9")],
)
def test_domain_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("pqsym: ")


@pytest.mark.parametrize("argv", [(), ("bogus",), ("enumerate", "xx", "--n", "2"), ("poset", "--n", "-1")])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hopf", "--max-n", "3")
    assert code == 0
    assert out.strip().endswith("checks passed")


def test_verify_failure_exits_3(capsys, monkeypatch):
    from pqsym import verify

    failing = verify.CheckResult("broken", "n <= 1", False, "a=(1,)", 0.0)
    monkeypatch.setattr(verify, "run_suite", lambda suite, max_n: [failing])
    code, out, _ = run(capsys, "verify", "--json")
    assert code == 3
    assert json.loads(out)["checks"][0]["counterexample"] == "a=(1,)"
