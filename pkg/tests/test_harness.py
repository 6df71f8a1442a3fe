import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PI, SIGMA, perms
from qshuffle import harness
from qshuffle.errors import InputError
from qshuffle.harness import (
    VerificationReport,
    run_suite,
    verify_garsia_gessel,
    verify_insertion_lemma,
    verify_macmahon,
    verify_roundtrip,
    verify_stanley,
)
from qshuffle.perm import Permutation
from qshuffle.qpartitions import QPoly, gaussian_binomial


def strip(report):
    d = report.to_json()
    d.pop("elapsed")
    return d


def test_stanley_reports():
    reps = verify_stanley(Permutation("6 3"), Permutation("1 4"))
    assert [r.parameters["k"] for r in reps] == [0, 1, 2, 3]
    assert all(r.passed for r in reps)
    reps = verify_stanley(SIGMA, PI)
    assert len(reps) == 13 and all(r.passed for r in reps)
    assert sum(r.lhs(1) for r in reps) == 1716


def test_stanley_empty_second_word():
    reps = verify_stanley(SIGMA, Permutation())
    nonzero = [r for r in reps if not r.lhs.is_zero()]
    assert [r.parameters["k"] for r in nonzero] == [2]
    assert nonzero[0].lhs == nonzero[0].rhs == QPoly.monomial(6)
    assert len(verify_stanley(Permutation(), Permutation())) == 1


def test_garsia_gessel_reports():
    rep = verify_garsia_gessel(Permutation("6 3"), Permutation("1 4"))
    assert rep.passed and rep.rhs == gaussian_binomial(4, 2).shift(1)
    rep = verify_garsia_gessel(Permutation(), Permutation())
    assert rep.lhs == rep.rhs == QPoly([1])


def test_macmahon():
    rep = verify_macmahon(3)
    assert rep.passed and rep.lhs == QPoly([1, 2, 2, 1])
    assert verify_macmahon(0).passed and verify_macmahon(7).passed
    with pytest.raises(InputError):
        verify_macmahon(9)
    assert verify_macmahon(9, cap=9).passed


def test_insertion_examples():
    rep = verify_insertion_lemma(Permutation("10 1 9 8 2 7 4 3 6"), 5)
    assert rep.passed and rep.lhs["rl_count"] == 6
    rep = verify_insertion_lemma(Permutation(), 1)
    assert rep.passed and rep.lhs["rl_count"] == 1
    rep = verify_insertion_lemma(Permutation("5 1 6 2 4"), 3)
    assert rep.lhs["increments"] == [2, 3, 1, 4, 0, 5]
    with pytest.raises(InputError):
        verify_insertion_lemma(Permutation("5 1"), 5)


def test_errors():
    with pytest.raises(InputError):
        verify_stanley(Permutation("6 3"), Permutation("3"))
    with pytest.raises(InputError):
        verify_garsia_gessel(Permutation("6 3"), Permutation("3"))
    with pytest.raises(InputError):
        run_suite(10, 0)
    with pytest.raises(InputError):
        VerificationReport("nonsense", {}, 1, 1)


def test_verdict_follows_sides():
    good = VerificationReport("macmahon", {"n": 1}, QPoly([1]), QPoly([1]))
    bad = VerificationReport("macmahon", {"n": 1}, QPoly([1]), QPoly([1, 1]))
    assert good.verdict == "pass" and bad.verdict == "fail"
    tampered = bad.to_json()
    tampered["verdict"] = "pass"
    with pytest.raises(InputError):
        VerificationReport.from_json(tampered)


def test_roundtrip_report():
    rep = verify_roundtrip(SIGMA, PI, Permutation("1 9 2 6 3 5 13 8 10 12 11 4 7"))
    assert rep.passed
    assert rep.parameters["pair"] == {"lambda": [6, 4, 3], "mu": [3, 2, 2], "k": 5}


def test_suite_small():
    reps = run_suite(4, seed=3)
    assert reps and all(r.passed for r in reps)
    kinds = {r.theorem for r in reps}
    assert {"stanley", "garsia_gessel", "bijection_roundtrip", "novick_prefix"} <= kinds
    empty = run_suite(0, seed=3)
    assert all(r.passed for r in empty)


def test_suite_deterministic():
    a = [strip(r) for r in run_suite(3, seed=11)]
    b = [strip(r) for r in run_suite(3, seed=11)]
    c = [strip(r) for r in run_suite(3, seed=12)]
    assert a == b
    assert a != c


def test_suite_reports_failures(monkeypatch):
    real = harness.sweep.stanley_sweep

    def broken(N):
        res = real(N)
        if N != 3:
            return res
        by_code = list(res.by_code)
        by_code[1] = 2
        from dataclasses import replace

        return replace(res, failures=2, code=1, fail_w=(2, 1, 3), fail_m=1, fail_k=0, by_code=tuple(by_code))

    monkeypatch.setattr(harness.sweep, "stanley_sweep", broken)
    reps = run_suite(3, seed=0)
    failed = [r for r in reps if not r.passed]
    assert len(failed) == 1 and failed[0].theorem == "stanley"
    assert failed[0].parameters["first_failure"]["sigma"] == [2]
    assert failed[0].lhs == failed[0].rhs - 2


@given(perms(max_len=6), st.integers(0, 30))
def test_json_roundtrip_is_byte_identical(sigma, r):
    if r in sigma:
        return
    for rep in [verify_insertion_lemma(sigma, r), verify_garsia_gessel(sigma, Permutation())]:
        text = rep.dumps()
        again = VerificationReport.loads(text)
        assert again.dumps() == text
        assert json.loads(text)["verdict"] == "pass"


def test_json_roundtrip_suite():
    for rep in run_suite(2, seed=5):
        text = rep.dumps()
        assert VerificationReport.loads(text).dumps() == text
