"""Exhaustive sweeps over relative-order classes, with their lookup tables.

The closed-form and partition-count tables are built here from
:mod:`qshuffle.qpartitions`; the enumeration side runs in
:mod:`qshuffle.kernels`.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

import numpy as np

from . import _jit, kernels
from .qpartitions import gaussian_binomial, garsia_gessel_rhs, stanley_rhs, weakly_decreasing_sequences

__all__ = ["SweepResult", "stanley_sweep", "roundtrip_sweep", "inverse_sweep", "novick_sweep"]


@dataclass(frozen=True)
class SweepResult:
    kind: str
    total_length: int
    instances: int
    failures: int
    items: int
    code: int
    fail_w: tuple
    fail_m: int
    fail_k: int
    elapsed: float
    by_code: tuple = ()

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def reason(self) -> str:
        return kernels.FAIL_CODES.get(self.code, f"code {self.code}")

    def failures_for(self, code: int) -> int:
        return self.by_code[code] if code < len(self.by_code) else 0

    def describe_failure(self) -> dict:
        if self.ok:
            return {}
        sigma, pi = self.failing_instance()
        return {"reason": self.reason, "sigma": list(sigma), "pi": list(pi), "k": self.fail_k}

    def failing_instance(self):
        """``(sigma, pi)`` of the first failure, or None."""
        if self.ok:
            return None
        w = self.fail_w[: self.total_length]
        return w[: self.fail_m], w[self.fail_m:]


def _result(kind, N, status, fail_w, t0) -> SweepResult:
    status = [int(x) for x in status]
    return SweepResult(
        kind, N, status[0], status[1], status[2], status[3],
        tuple(int(x) for x in fail_w), status[4], status[5], time.perf_counter() - t0,
        tuple(status[kernels.STATUS_HEAD:]),
    )


@lru_cache(maxsize=None)
def shuffle_patterns(N: int):
    """Index tables placing ``w[:m]`` and ``w[m:]`` into every interleaving.

    Returns ``(patterns, offset, count)``; rows for cut ``m`` start at
    ``offset[m]``, in the same order as :func:`qshuffle.perm.enumerate_shuffles`.
    """
    rows = []
    offset = np.zeros(N + 1, np.int64)
    count = np.zeros(N + 1, np.int64)
    for m in range(N + 1):
        offset[m] = len(rows)
        n = N - m
        for slots in combinations(range(N), n):
            row = [0] * N
            chosen = set(slots)
            si, pj = 0, m
            for pos in range(N):
                if pos in chosen:
                    row[pos] = pj
                    pj += 1
                else:
                    row[pos] = si
                    si += 1
            rows.append(row)
        count[m] = comb(N, n)
    patterns = np.array(rows, np.int64).reshape(len(rows), N)
    return patterns, offset, count


@lru_cache(maxsize=None)
def closed_form_tables(N: int):
    """Unshifted closed forms ``rhs[m, r, s, k, e]`` and ``gg[m, e]`` for ``m + n = N``."""
    K = max(N, 1)
    D = N * (N - 1) // 2 + 1
    R = N + 1
    rhs = np.zeros((N + 1, R, R, K, D), np.int64)
    rhs_at1 = np.zeros((N + 1, R, R, K), np.int64)
    gg = np.zeros((N + 1, D), np.int64)
    gg_at1 = np.zeros(N + 1, np.int64)
    for m in range(N + 1):
        n = N - m
        g = garsia_gessel_rhs(m, n, 0, 0)
        gg_at1[m] = g(1)
        gg[m, : min(len(g), D)] = g.coeffs[:D]
        for r in range(max(m, 1)):
            for s in range(max(n, 1)):
                for k in range(K):
                    p = stanley_rhs(m, n, r, s, k, 0, 0)
                    rhs_at1[m, r, s, k] = p(1)
                    rhs[m, r, s, k, : min(len(p), D)] = p.coeffs[:D]
    return rhs, rhs_at1, gg, gg_at1


@lru_cache(maxsize=None)
def pair_tables(N: int):
    """Every valid ``(lam, mu)`` for each ``(m, r, s, k)`` with ``m + n = N``.

    Returns ``(rows, offset, count)``: row ``offset[m, r, s, k] + c`` is
    ``lam`` followed by ``mu`` (zeros kept), ``count`` is the number of pairs.
    """
    R = N + 1
    offset = np.zeros((R, R, R, R), np.int64)
    count = np.zeros((R, R, R, R), np.int64)
    rows = []
    for m in range(N + 1):
        n = N - m
        for r in range(max(m, 1)):
            for s in range(max(n, 1)):
                for k in range(R):
                    offset[m, r, s, k] = len(rows)
                    if k < r or k < s or n - k + r < 0:
                        continue
                    lams = weakly_decreasing_sequences(k - r, k - s, m)
                    mus = weakly_decreasing_sequences(n - k + r, 0, k - s)
                    for lam in lams:
                        for mu in mus:
                            rows.append(list(lam) + list(mu))
                    count[m, r, s, k] = len(lams) * len(mus)
    width = max(N, 1)
    table = np.zeros((max(len(rows), 1), width), np.int64)
    for i, row in enumerate(rows):
        table[i, : len(row)] = row
    return table, offset, count


def stanley_sweep(N: int) -> SweepResult:
    """Both shuffle identities for every class with ``m + n = N``."""
    patterns, offset, count = shuffle_patterns(N)
    rhs, rhs_at1, gg, gg_at1 = closed_form_tables(N)
    t0 = time.perf_counter()
    if _jit.USING_NUMBA:
        status, fail_w = kernels.stanley_sweep(N, patterns, offset, count, rhs, rhs_at1, gg, gg_at1)
    else:
        status, fail_w = stanley_sweep_numpy(N, patterns, offset, count, rhs, rhs_at1, gg, gg_at1)
    return _result("stanley", N, status, fail_w, t0)


def roundtrip_sweep(N: int) -> SweepResult:
    _, _, count = pair_tables(N)
    t0 = time.perf_counter()
    status, fail_w = kernels.roundtrip_sweep(N, count)
    return _result("roundtrip", N, status, fail_w, t0)


def inverse_sweep(N: int) -> SweepResult:
    rows, offset, count = pair_tables(N)
    t0 = time.perf_counter()
    status, fail_w = kernels.inverse_sweep(N, rows, offset, count)
    return _result("inverse", N, status, fail_w, t0)


def novick_sweep(N: int) -> SweepResult:
    t0 = time.perf_counter()
    status, fail_w = kernels.novick_sweep(N)
    return _result("novick", N, status, fail_w, t0)


def all_permutations(N: int) -> np.ndarray:
    """All permutations of ``1..N`` in lexicographic order, one per row."""
    out = np.empty((factorial(N), N), np.int64)
    w = np.arange(1, N + 1, dtype=np.int64)
    out[0] = w
    for i in range(1, out.shape[0]):
        kernels.next_permutation(w)
        out[i] = w
    return out


def _des_maj_rows(a: np.ndarray):
    if a.shape[-1] < 2:
        z = np.zeros(a.shape[:-1], np.int64)
        return z, z
    drops = a[..., :-1] > a[..., 1:]
    pos = np.arange(1, a.shape[-1], dtype=np.int64)
    return drops.sum(-1), (drops * pos).sum(-1)


def stanley_sweep_numpy(N, patterns, pat_offset, pat_count, rhs, rhs_at1, gg, gg_at1, block=4096):
    """Vectorised twin of :func:`qshuffle.kernels.stanley_sweep`, same inputs and outputs."""
    status = np.zeros(kernels.STATUS_LEN, np.int64)
    fail_w = np.zeros(max(N, 1), np.int64)
    K = max(N, 1)
    D = N * (N - 1) // 2 + 1
    perms = all_permutations(N)
    e_idx = np.arange(D)
    for start in range(0, perms.shape[0], block):
        W = perms[start:start + block]
        B = W.shape[0]
        for m in range(N + 1):
            r, ms = _des_maj_rows(W[:, :m])
            s, mp = _des_maj_rows(W[:, m:])
            off = ms + mp
            pat = patterns[pat_offset[m]: pat_offset[m] + pat_count[m]]
            alphas = W[:, pat] if N else np.zeros((B, pat.shape[0], 0), np.int64)
            d, e = _des_maj_rows(alphas)
            flat = (np.arange(B)[:, None] * K + d) * D + e
            hist = np.bincount(flat.ravel(), minlength=B * K * D).reshape(B, K, D)
            shifted = e_idx[None, :] - off[:, None]
            valid = shifted >= 0
            sh = np.where(valid, shifted, 0)
            expect = rhs[m, r[:, None, None], s[:, None, None], np.arange(K)[None, :, None], sh[:, None, :]]
            expect = np.where(valid[:, None, :], expect, 0)
            bad_st = (hist != expect).any(axis=2) | (hist.sum(axis=2) != rhs_at1[m, r[:, None], s[:, None], np.arange(K)[None, :]])
            tot = hist.sum(axis=1)
            g_exp = np.where(valid, gg[m][sh], 0)
            bad_gg = (tot != g_exp).any(axis=1) | (tot.sum(axis=1) != gg_at1[m])
            status[0] += B
            status[2] += B * int(pat_count[m])
            for row in np.flatnonzero(bad_st.any(axis=1) | bad_gg):
                if bad_st[row].any():
                    _numpy_fail(status, fail_w, W[row], 1, m, int(np.argmax(bad_st[row])))
                if bad_gg[row]:
                    _numpy_fail(status, fail_w, W[row], 2, m, -1)
    return status, fail_w


def _numpy_fail(status, fail_w, w, code, m, k):
    status[1] += 1
    status[kernels.STATUS_HEAD + code] += 1
    if status[3] == 0:
        status[3] = code
        status[4] = m
        status[5] = k
        fail_w[: len(w)] = w
