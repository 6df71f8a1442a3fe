import json

import pytest

from qshuffle import cli, harness
from qshuffle.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from qshuffle.harness import VerificationReport
from qshuffle.qpartitions import QPoly

SIGMA = "9 3 8 10 12 4 7"
PI = "1 2 6 5 13 11"
ALPHA = "1 9 2 6 3 5 13 8 10 12 11 4 7"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats(capsys):
    code, out, _ = run(capsys, "--json", "stats", "--perm", SIGMA)
    assert code == EXIT_OK
    assert json.loads(out) == {
        "perm": [9, 3, 8, 10, 12, 4, 7], "descent_set": [1, 5], "des": 2, "maj": 6,
        "tail_descents": [2, 1, 1, 1, 1, 0, 0],
    }
    code, out, _ = run(capsys, "stats", "--perm", "3,1,2")
    assert "maj          1" in out


def test_flags_after_subcommand(capsys):
    a = run(capsys, "--json", "stats", "--perm", "2 1")
    b = run(capsys, "stats", "--perm", "2 1", "--json")
    assert a == b


def test_shuffles(capsys):
    code, out, _ = run(capsys, "--json", "shuffles", "--sigma", "6 3", "--pi", "1 4")
    rows = json.loads(out)["shuffles"]
    assert [r["alpha"] for r in rows][:2] == [[1, 4, 6, 3], [1, 6, 4, 3]]
    code, out, _ = run(capsys, "shuffles", "--sigma", "6 3", "--pi", "1 4", "--k", "1")
    assert out.count("des=1") == len(out.strip().splitlines())
    code, out, _ = run(capsys, "--json", "shuffles", "--sigma", "6 3", "--pi", "1 4", "--gf")
    data = json.loads(out)
    assert sum(QPoly.from_json(v)(1) for v in data["distribution"].values()) == 6
    code, out, _ = run(capsys, "shuffles", "--sigma", "6 3", "--pi", "1 4", "--gf", "--k", "3")
    assert out.strip() == "k=3: 0"


def test_phi_trace(capsys):
    code, out, _ = run(capsys, "phi", "--sigma", SIGMA, "--pi", PI, "--alpha", ALPHA, "--trace")
    assert code == EXIT_OK
    assert "lambda = (6, 4, 3)" in out and "mu = (3, 2, 2)" in out
    code, out, _ = run(capsys, "--json", "--trace", "phi", "--sigma", SIGMA, "--pi", PI, "--alpha", ALPHA)
    data = json.loads(out)
    assert data["lambda"] == [6, 4, 3] and data["trace"]["positions"] == [1, 2, 2, 3, 3, 6]
    assert data["trace"]["t"] == [3, 2, 3, 2, 4, 6]


def test_psi(capsys):
    code, out, _ = run(capsys, "psi", "--sigma", SIGMA, "--pi", PI, "--k", "5",
                       "--lambda", "6 4 3", "--mu", "3 2 2", "--trace")
    assert code == EXIT_OK and out.strip().endswith(f"alpha = {ALPHA}")
    assert "[3]" in out
    # trailing zero parts may be left out
    code, out, _ = run(capsys, "--json", "psi", "--sigma", "6 3", "--pi", "1 4", "--k", "1")
    assert code == EXIT_OK and json.loads(out)["alpha"] == [6, 1, 3, 4]


def test_labeling_and_mis(capsys):
    code, out, _ = run(capsys, "--json", "labeling", "--perm", "10 1 9 8 2 7 4 3 6", "--letter", "5")
    data = json.loads(out)
    assert data["labels"] == [5, 6, 4, 3, 7, 2, 8, 1, 0, 9] and data["rl_count"] == 6
    code, out, _ = run(capsys, "labeling", "--perm", "10 1 9 8 2 7 4 3 6", "--letter", "5")
    assert "RL spaces  0 2 3 5 7 8" in out and "LR spaces  1 4 6 9" in out
    code, out, _ = run(capsys, "mis", "--perm", "5 1 6 2 4", "--letter", "3", "--trace")
    assert "MIS = (2, 3, 1, 4, 0, 5)" in out


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "stanley", "--sigma", "6 3", "--pi", "1 4")
    assert code == EXIT_OK and out.strip().endswith("4/4 passed")
    code, out, _ = run(capsys, "--json", "verify", "garsia-gessel", "--sigma", "6 3", "--pi", "1 4")
    (rep,) = json.loads(out)
    assert rep["verdict"] == "pass"
    assert VerificationReport.from_json(rep).dumps() == json.dumps(rep, sort_keys=True)
    assert run(capsys, "verify", "macmahon", "--n", "5")[0] == EXIT_OK
    assert run(capsys, "verify", "insertion", "--perm", "5 1 6 2 4", "--letter", "3")[0] == EXIT_OK
    code, out, _ = run(capsys, "--json", "verify", "suite", "--max-len", "3", "--seed", "2")
    assert code == EXIT_OK and all(r["verdict"] == "pass" for r in json.loads(out))


@pytest.mark.parametrize("argv", [
    ["verify", "macmahon", "--n", "9"],
    ["verify", "suite", "--max-len", "10"],
    ["verify", "stanley", "--sigma", "6 3"],
    ["verify", "stanley", "--sigma", "6 3", "--pi", "3 4"],
    ["stats", "--perm", "1 1"],
    ["phi", "--sigma", "6 3", "--pi", "1 4", "--alpha", "3 6 1 4"],
    ["psi", "--sigma", "6 3", "--pi", "1 4", "--k", "1", "--lambda", "9"],
    ["psi", "--sigma", "6 3", "--pi", "1 4", "--k", "1", "--mu", "-1"],
    ["bogus"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_help_is_success(capsys):
    assert run(capsys, "--help")[0] == EXIT_OK


def test_failure_exit_code(capsys, monkeypatch):
    def broken(n, cap=harness.MACMAHON_CAP):
        return VerificationReport("macmahon", {"n": n}, QPoly([1]), QPoly([2]))

    monkeypatch.setattr(cli.harness, "verify_macmahon", broken)
    code, out, _ = run(capsys, "verify", "macmahon", "--n", "1")
    assert code == EXIT_FAIL and out.startswith("FAIL") and "0/1 passed" in out
