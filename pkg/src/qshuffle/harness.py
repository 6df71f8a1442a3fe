"""Verification reports for the shuffle identities and the bijection.

Every report compares a left side obtained by enumeration with a right
side obtained from a closed form or an independent construction; the
verdict is ``pass`` exactly when the two are equal.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import permutations

from . import sweep
from .bijection import decompose, is_valid_pair, phi, psi, t_sequence_check
from .errors import ContractViolation, InputError
from .insertion import SpaceKind, canonical_labeling, descent_change, insert_at, mis, mis_prefix_set
from .perm import Permutation, are_disjoint, des, enumerate_shuffles, maj, shuffle_distribution
from .qpartitions import QPoly, garsia_gessel_rhs, q_factorial, q_integer, stanley_rhs

__all__ = [
    "THEOREMS",
    "VerificationReport",
    "verify_stanley",
    "verify_garsia_gessel",
    "verify_macmahon",
    "verify_insertion_lemma",
    "verify_roundtrip",
    "run_suite",
    "MACMAHON_CAP",
    "SUITE_CAP",
]

THEOREMS = ("stanley", "garsia_gessel", "macmahon", "insertion_lemma", "bijection_roundtrip", "novick_prefix")
MACMAHON_CAP = 8
SUITE_CAP = 9


def encode(value):
    if isinstance(value, QPoly):
        return {"qpoly": value.to_json()}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def decode(value):
    if isinstance(value, dict):
        if set(value) == {"qpoly"}:
            return QPoly.from_json(value["qpoly"])
        return {k: decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode(v) for v in value]
    return value


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    parameters: dict
    lhs: object
    rhs: object
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise InputError(f"unknown theorem {self.theorem!r}")

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "parameters": encode(self.parameters),
            "lhs": encode(self.lhs),
            "rhs": encode(self.rhs),
            "verdict": self.verdict,
            "elapsed": self.elapsed,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        rep = cls(data["theorem"], decode(data["parameters"]), decode(data["lhs"]), decode(data["rhs"]), data["elapsed"])
        if rep.verdict != data["verdict"]:
            raise InputError("verdict disagrees with lhs/rhs")
        return rep

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "VerificationReport":
        return cls.from_json(json.loads(text))


def _pair(sigma, pi):
    sigma, pi = Permutation(sigma), Permutation(pi)
    if not are_disjoint(sigma, pi):
        raise InputError(f"permutations share letters {sorted(set(sigma) & set(pi))}")
    return sigma, pi


def verify_stanley(sigma, pi) -> list:
    """One report per ``k = 0 .. m+n-1`` comparing enumeration with the closed form."""
    sigma, pi = _pair(sigma, pi)
    m, n = len(sigma), len(pi)
    r, s = des(sigma), des(pi)
    t0 = time.perf_counter()
    dist = shuffle_distribution(sigma, pi)
    enum_time = time.perf_counter() - t0
    reports = []
    for k in range(max(m + n, 1)):
        t1 = time.perf_counter()
        rhs = stanley_rhs(m, n, r, s, k, maj(sigma), maj(pi))
        lhs = dist.get(k, QPoly())
        params = {"sigma": list(sigma), "pi": list(pi), "k": k, "m": m, "n": n, "r": r, "s": s}
        reports.append(VerificationReport("stanley", params, lhs, rhs, enum_time + time.perf_counter() - t1))
    return reports


def verify_garsia_gessel(sigma, pi) -> VerificationReport:
    sigma, pi = _pair(sigma, pi)
    t0 = time.perf_counter()
    terms: dict = {}
    for alpha in enumerate_shuffles(sigma, pi):
        e = maj(alpha)
        terms[e] = terms.get(e, 0) + 1
    lhs = QPoly.from_dict(terms)
    rhs = garsia_gessel_rhs(len(sigma), len(pi), maj(sigma), maj(pi))
    params = {"sigma": list(sigma), "pi": list(pi), "m": len(sigma), "n": len(pi)}
    return VerificationReport("garsia_gessel", params, lhs, rhs, time.perf_counter() - t0)


def verify_macmahon(n: int, cap: int = MACMAHON_CAP) -> VerificationReport:
    if n < 0:
        raise InputError("n must be non-negative")
    if n > cap:
        raise InputError(f"n={n} exceeds the enumeration cap {cap}")
    t0 = time.perf_counter()
    terms: dict = {}
    for p in permutations(range(1, n + 1)):
        e = maj(p)
        terms[e] = terms.get(e, 0) + 1
    return VerificationReport("macmahon", {"n": n}, QPoly.from_dict(terms), q_factorial(n), time.perf_counter() - t0)


def verify_insertion_lemma(sigma, r: int) -> VerificationReport:
    """Insertion generating function, label/increment agreement, RL count and descent change."""
    sigma = Permutation(sigma)
    if r in sigma:
        raise InputError(f"letter {r} already occurs in {sigma}")
    t0 = time.perf_counter()
    n = len(sigma)
    increments = mis(sigma, r)
    lab = canonical_labeling(sigma, r)
    gf = sum((QPoly.monomial(maj(insert_at(sigma, i, r))) for i in range(n + 1)), QPoly())
    lhs = {
        "gf": gf,
        "increments": list(increments),
        "rl_count": lab.rl_count,
        "descent_change": [descent_change(sigma, i, r) for i in range(n + 1)],
    }
    rhs = {
        "gf": q_integer(n + 1).shift(maj(sigma)),
        "increments": list(lab.labels),
        "rl_count": des(sigma) + 1,
        "descent_change": [0 if kind is SpaceKind.RL else 1 for kind in lab.kinds],
    }
    return VerificationReport("insertion_lemma", {"sigma": list(sigma), "letter": r}, lhs, rhs, time.perf_counter() - t0)


def verify_roundtrip(sigma, pi, alpha) -> VerificationReport:
    """``psi(phi(alpha)) == alpha`` with the pair's membership, weight law and T-set nesting."""
    sigma, pi = _pair(sigma, pi)
    t0 = time.perf_counter()
    pair = phi(sigma, pi, alpha)
    dec = decompose(sigma, pi, alpha)
    try:
        t_sequence_check(dec)
        nested = True
    except ContractViolation:
        nested = False
    back = psi(sigma, pi, pair.k, pair)
    lhs = {
        "alpha": list(back),
        "valid_pair": is_valid_pair(len(sigma), len(pi), des(sigma), des(pi), pair),
        "maj": maj(alpha),
        "nested": nested,
    }
    rhs = {"alpha": list(alpha), "valid_pair": True, "maj": pair.weight + maj(sigma) + maj(pi), "nested": True}
    params = {"sigma": list(sigma), "pi": list(pi), "alpha": list(alpha), "pair": pair.to_json()}
    return VerificationReport("bijection_roundtrip", params, lhs, rhs, time.perf_counter() - t0)


def _sweep_report(theorem, res: sweep.SweepResult, codes, check: str) -> VerificationReport:
    failures = sum(res.failures_for(c) for c in codes)
    params = {"check": check, "total_length": res.total_length, "instances": res.instances, "items": res.items}
    if failures:
        params["first_failure"] = res.describe_failure()
    return VerificationReport(theorem, params, res.instances - failures, res.instances, res.elapsed)


def _instance_reports(res: sweep.SweepResult) -> list:
    """Recompute a failing sweep instance on the reference path for full data."""
    inst = res.failing_instance()
    if inst is None:
        return []
    sigma, pi = inst
    out = verify_stanley(sigma, pi) + [verify_garsia_gessel(sigma, pi)]
    if len(sigma) + len(pi) <= 8:
        for alpha in enumerate_shuffles(sigma, pi):
            try:
                rep = verify_roundtrip(sigma, pi, alpha)
            except ContractViolation as exc:
                rep = VerificationReport(
                    "bijection_roundtrip",
                    {"sigma": list(sigma), "pi": list(pi), "alpha": list(alpha), "error": str(exc)},
                    "error", "ok",
                )
            if not rep.passed:
                out.append(rep)
                break
    return [r for r in out if not r.passed]


def sweep_reports(N: int) -> list:
    """Exhaustive reports for every relative-order class with ``m + n = N``."""
    reports = []
    st = sweep.stanley_sweep(N)
    reports.append(_sweep_report("stanley", st, (1,), "all classes, all k"))
    reports.append(_sweep_report("garsia_gessel", st, (2,), "all classes"))
    reports.extend(_instance_reports(st))
    rt = sweep.roundtrip_sweep(N)
    reports.append(_sweep_report("bijection_roundtrip", rt, tuple(range(3, 14)), "psi(phi(alpha)) over all shuffles"))
    reports.extend(_instance_reports(rt))
    inv = sweep.inverse_sweep(N)
    reports.append(_sweep_report("bijection_roundtrip", inv, (14, 15, 16), "phi(psi(pair)) over all pairs"))
    reports.extend(_instance_reports(inv))
    if N >= 2:
        nv = sweep.novick_sweep(N)
        reports.append(_sweep_report("novick_prefix", nv, (17,), "all sigma, p, q, prefix lengths"))
    return reports


def _random_instance(rng: random.Random, N: int):
    letters = rng.sample(range(1, 3 * N + 1), N)
    m = rng.randint(0, N)
    return Permutation(letters[:m]), Permutation(letters[m:])


def spot_check_reports(rng: random.Random, N: int, samples: int = 20) -> list:
    sigma, pi = _random_instance(rng, N)
    reports = verify_stanley(sigma, pi) + [verify_garsia_gessel(sigma, pi)]
    shuffles = list(enumerate_shuffles(sigma, pi))
    for alpha in rng.sample(shuffles, min(samples, len(shuffles))):
        reports.append(verify_roundtrip(sigma, pi, alpha))
    if len(sigma) + len(pi) >= 2:
        base = list(sigma) + list(pi)
        p, q = base[-2], base[-1]
        rest = base[:-2]
        i = rng.randint(1, len(rest) + 1)
        t0 = time.perf_counter()
        lhs = sorted(mis_prefix_set(insert_at(rest, i - 1, p), i, q))
        rhs = sorted(x + (q > p) for x in mis_prefix_set(rest, i, p))
        params = {"sigma": rest, "p": p, "q": q, "i": i}
        reports.append(VerificationReport("novick_prefix", params, lhs, rhs, time.perf_counter() - t0))
    return reports


def run_suite(max_total_length: int, seed: int = 0, *, cap: int = SUITE_CAP, spot_checks: int = 3, spot_extra: int = 3) -> list:
    """Exhaustive sweeps for ``m + n <= max_total_length`` plus seeded random spot checks.

    Spot checks draw ``spot_checks`` instances with ``m + n`` between
    ``max_total_length + 1`` and ``max_total_length + spot_extra``.
    """
    if max_total_length > cap:
        raise InputError(f"max_total_length={max_total_length} exceeds the cap {cap}")
    reports = []
    for N in range(0, max_total_length + 1):
        reports.extend(sweep_reports(N))
    rng = random.Random(seed)
    lo = max(max_total_length + 1, 1)
    for _ in range(spot_checks if max_total_length > 0 else 0):
        reports.extend(spot_check_reports(rng, rng.randint(lo, lo + spot_extra - 1)))
    return reports
