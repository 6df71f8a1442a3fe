"""Compiled sweeps over every relative-order class of ``(sigma, pi)``.

A class with ``m + n = N`` letters is a permutation ``w`` of ``1..N`` cut
after position ``m``: ``sigma = w[:m]``, ``pi = w[m:]``. Each sweep walks
all ``N!`` permutations ``w`` and all cuts, so it covers the ``(N+1) N!``
classes once.

Kernels return a status vector ``[instances, failures, items, code,
fail_m, fail_k]`` followed by one failure counter per code, plus the
permutation ``w`` of the first failure. Failure codes are listed in
:data:`FAIL_CODES`.
"""
import numpy as np

from ._jit import njit

FAIL_CODES = {
    0: "ok",
    1: "stanley coefficient mismatch",
    2: "garsia-gessel coefficient mismatch",
    3: "descent change outside {0, 1}",
    4: "t(i) differs from its T-sequence entry",
    5: "repeated value in T-sequence prefix",
    6: "T-sequence value outside 0..m",
    7: "T-sequence value sets not nested",
    8: "t(i) is not the extreme of its T-sequence",
    9: "descent drops do not number k - r",
    10: "pair violates the partition inequalities",
    11: "weight law fails",
    12: "inverse map chose a different position",
    13: "shuffle count per k differs from pair count",
    14: "inverse map found no admissible space",
    15: "inverse map result has wrong descent count",
    16: "forward map of inverse result differs from pair",
    17: "novick prefix sets differ",
}

STATUS_HEAD = 6
STATUS_LEN = STATUS_HEAD + len(FAIL_CODES)


@njit
def next_permutation(a):
    """Advance ``a`` to its lexicographic successor in place; False after the last."""
    n = a.shape[0]
    j = n - 2
    while j >= 0 and a[j] > a[j + 1]:
        j -= 1
    if j < 0:
        return False
    l = n - 1
    while a[j] >= a[l]:
        l -= 1
    tmp = a[j]
    a[j] = a[l]
    a[l] = tmp
    lo = j + 1
    hi = n - 1
    while lo < hi:
        tmp = a[lo]
        a[lo] = a[hi]
        a[hi] = tmp
        lo += 1
        hi -= 1
    return True


@njit
def des_maj(a, start, stop):
    d = 0
    e = 0
    for p in range(start + 1, stop):
        if a[p - 1] > a[p]:
            d += 1
            e += p - start
    return d, e


@njit
def tail_descents(a, start, stop, out):
    """``out[i]`` = descents of ``a[start:stop]`` at 1-based positions ``>= i``."""
    length = stop - start
    out[length + 1] = 0
    if length >= 0:
        out[length] = 0
    for q in range(length - 1, 0, -1):
        out[q] = out[q + 1]
        if a[start + q - 1] > a[start + q]:
            out[q] += 1
    out[0] = out[1] if length >= 1 else 0


@njit
def major_increments(node, length, x, shift, suf, out):
    """``out[j]`` = maj gained by inserting ``x`` at space ``j`` of ``node[:length]``, minus ``shift``."""
    tail_descents(node, 0, length, suf)
    for j in range(length + 1):
        inc = suf[j + 1]
        if j >= 1 and node[j - 1] > x:
            inc += j
        if j < length and x > node[j]:
            inc += j + 1
        if 1 <= j < length and node[j - 1] > node[j]:
            inc -= j
        out[j] = inc - shift


@njit
def _fail(status, fail_w, w, code, m, k):
    status[1] += 1
    status[STATUS_HEAD + code] += 1
    if status[3] == 0:
        status[3] = code
        status[4] = m
        status[5] = k
        for i in range(w.shape[0]):
            fail_w[i] = w[i]


@njit
def stanley_sweep(N, patterns, pat_offset, pat_count, rhs, rhs_at1, gg, gg_at1):
    """Compare shuffle (des, maj) histograms with tabulated closed forms.

    ``patterns[c, pos]`` is the index into ``w`` of the letter at ``pos``.
    ``rhs[m, r, s, k]`` holds the unshifted closed form for ``k`` descents
    and ``gg[m]`` the unshifted all-shuffle form; ``*_at1`` are their
    values at ``q = 1``, which rules out mass beyond the histogram range.
    """
    status = np.zeros(STATUS_LEN, np.int64)
    fail_w = np.zeros(max(N, 1), np.int64)
    w = np.arange(1, N + 1).astype(np.int64)
    K = max(N, 1)
    D = N * (N - 1) // 2 + 1
    hist = np.zeros((K, D), np.int64)
    while True:
        for m in range(N + 1):
            r, ms = des_maj(w, 0, m)
            s, mp = des_maj(w, m, N)
            off = ms + mp
            hist[:, :] = 0
            c0 = pat_offset[m]
            for c in range(c0, c0 + pat_count[m]):
                d = 0
                e = 0
                if N > 0:
                    prev = w[patterns[c, 0]]
                    for pos in range(1, N):
                        cur = w[patterns[c, pos]]
                        if prev > cur:
                            d += 1
                            e += pos
                        prev = cur
                hist[d, e] += 1
            status[2] += pat_count[m]
            status[0] += 1
            bad_k = -1
            for k in range(K):
                acc = 0
                for e in range(D):
                    h = hist[k, e]
                    acc += h
                    expect = 0
                    if e >= off:
                        expect = rhs[m, r, s, k, e - off]
                    if h != expect and bad_k < 0:
                        bad_k = k
                if acc != rhs_at1[m, r, s, k] and bad_k < 0:
                    bad_k = k
            if bad_k >= 0:
                _fail(status, fail_w, w, 1, m, bad_k)
            acc = 0
            bad = False
            for e in range(D):
                t = 0
                for k in range(K):
                    t += hist[k, e]
                acc += t
                expect = 0
                if e >= off:
                    expect = gg[m, e - off]
                if t != expect:
                    bad = True
            if acc != gg_at1[m] or bad:
                _fail(status, fail_w, w, 2, m, -1)
        if not next_permutation(w):
            break
    return status, fail_w


@njit
def roundtrip_sweep(N, pair_count):
    """Walk every shuffle by inserting ``pi_n, ..., pi_1`` into ``sigma``.

    Level ``b`` of the walk holds ``alpha^(n-b)``; its children insert
    ``pi_{n-b}`` at spaces ``0..lim`` where ``lim`` is the space just
    before ``pi_{n-b+1}``. Along each path the forward map is read off
    directly (``t(i)`` from maj differences of the materialised chain) and
    checked for the T-sequence properties, the partition inequalities and
    the weight law. The inverse map, which takes the largest admissible
    space, agrees with the path exactly when no value it skips over lies in
    the multiset still to be placed; that is checked with bitmasks. Leaf
    counts per ``k`` are compared with ``pair_count[m, r, s, k]``.
    """
    status = np.zeros(STATUS_LEN, np.int64)
    fail_w = np.zeros(max(N, 1), np.int64)
    w = np.arange(1, N + 1).astype(np.int64)
    W = N + 2
    nodes = np.zeros((W, W), np.int64)
    nmaj = np.zeros(W, np.int64)
    ndes = np.zeros(W, np.int64)
    T = np.zeros((W, W), np.int64)
    row_mask = np.zeros(W, np.int64)
    row_ok = np.zeros(W, np.bool_)
    run_mask = np.zeros(W, np.int64)
    run_max = np.zeros(W, np.int64)
    run_min = np.zeros(W, np.int64)
    run_dist = np.zeros(W, np.bool_)
    skip = np.zeros(W, np.int64)
    choice = np.zeros(W, np.int64)
    tval = np.zeros(W, np.int64)
    # path aggregates; entry b summarises levels 0..b-1
    nflags = np.zeros(W, np.int64)
    tsum = np.zeros(W, np.int64)
    last_lam = np.zeros(W, np.int64)
    last_mu = np.zeros(W, np.int64)
    dt = np.zeros(W + 1, np.int64)
    leaves = np.zeros(W, np.int64)
    NONE = -1
    while True:
        for m in range(N + 1):
            n = N - m
            r, ms = des_maj(w, 0, m)
            s, mp = des_maj(w, m, N)
            tail_descents(w, m, N, dt)
            for q in range(n + 1, W + 1):
                dt[q] = 0
            for q in range(m):
                nodes[0, q] = w[q]
            nmaj[0] = ms
            ndes[0] = r
            nflags[0] = 0
            tsum[0] = 0
            last_lam[0] = NONE
            last_mu[0] = NONE
            leaves[:] = 0
            status[0] += 1
            failed = False
            if n > 0:
                _fill_row(nodes[0], m, m, w[m + n - 1], dt[n], T[0], row_mask, row_ok, 0)
            b = 0
            choice[0] = -1
            while b >= 0:
                if b == n:
                    k = ndes[n]
                    code = 0
                    ks = k - s
                    if nflags[n] != k - r:
                        code = 9
                    elif ks < 0 or (last_lam[n] != NONE and last_lam[n] < ks) or last_mu[n] > ks:
                        code = 10
                    elif nmaj[n] != tsum[n] + ms + mp:
                        code = 11
                    else:
                        acc = np.int64(0)
                        for q in range(n - 1, -1, -1):
                            acc |= np.int64(1) << tval[q]
                            if skip[q] & acc:
                                code = 12
                                break
                    if code != 0 and not failed:
                        _fail(status, fail_w, w, code, m, k)
                        failed = True
                    leaves[k] += 1
                    status[2] += 1
                    b -= 1
                    continue
                lim = m if b == 0 else choice[b - 1]
                j = choice[b] + 1
                if j > lim:
                    b -= 1
                    continue
                choice[b] = j
                v = T[b, j]
                vbit = np.int64(1) << v if 0 <= v < 62 else np.int64(1) << 62
                if j == 0:
                    run_mask[b] = vbit
                    run_max[b] = v
                    run_min[b] = v
                    run_dist[b] = True
                else:
                    if run_mask[b] & vbit:
                        run_dist[b] = False
                    run_mask[b] |= vbit
                    run_max[b] = max(run_max[b], v)
                    run_min[b] = min(run_min[b], v)
                skip[b] = row_mask[b] & ~run_mask[b]
                x = w[m + n - b - 1]
                L = m + b
                cur = nodes[b]
                nxt = nodes[b + 1]
                for q in range(j):
                    nxt[q] = cur[q]
                nxt[j] = x
                for q in range(j, L):
                    nxt[q + 1] = cur[q]
                d1, e1 = des_maj(nxt, 0, L + 1)
                nmaj[b + 1] = e1
                ndes[b + 1] = d1
                i = n - b
                t = e1 - nmaj[b] - dt[i]
                fl = d1 - ndes[b]
                tval[b] = t
                code = 0
                if fl != 0 and fl != 1:
                    code = 3
                elif t != v:
                    code = 4
                elif not run_dist[b] or not row_ok[b]:
                    code = 5
                elif run_min[b] < 0 or run_max[b] > m:
                    code = 6
                elif b >= 1 and (run_mask[b] & ~run_mask[b - 1]) != 0:
                    code = 7
                elif (fl == 1 and t != run_max[b]) or (fl == 0 and t != run_min[b]):
                    code = 8
                nflags[b + 1] = nflags[b] + fl
                tsum[b + 1] = tsum[b] + t
                last_lam[b + 1] = last_lam[b]
                last_mu[b + 1] = last_mu[b]
                if fl == 1:
                    if t > m or (last_lam[b] != NONE and t > last_lam[b]):
                        code = 10 if code == 0 else code
                    last_lam[b + 1] = t
                else:
                    if t < 0 or (last_mu[b] != NONE and t < last_mu[b]):
                        code = 10 if code == 0 else code
                    last_mu[b + 1] = t
                if code != 0:
                    if not failed:
                        _fail(status, fail_w, w, code, m, -1)
                        failed = True
                    # deeper checks rely on the invariants above, so prune here
                    continue
                if b + 1 < n:
                    _fill_row(nxt, L + 1, j, w[m + n - b - 2], dt[i - 1], T[b + 1], row_mask, row_ok, b + 1)
                b += 1
                choice[b] = -1
            for k in range(W):
                expect = pair_count[m, r, s, k] if k < pair_count.shape[3] else 0
                if leaves[k] != expect and not failed:
                    _fail(status, fail_w, w, 13, m, k)
                    failed = True
        if not next_permutation(w):
            break
    return status, fail_w


@njit
def _fill_row(node, length, lim, x, shift, out, row_mask, row_ok, b):
    """Shifted major increments of ``x`` into ``node[:length]`` over spaces ``0..lim``.

    Also records the value bitmask of the row and whether its values are distinct.
    """
    later = 0
    for q in range(length - 1, lim, -1):
        if node[q - 1] > node[q]:
            later += 1
    mask = np.int64(0)
    ok = True
    # right to left, so ``later`` counts descents at positions > j
    for j in range(lim, -1, -1):
        inc = later
        if j >= 1 and node[j - 1] > x:
            inc += j
        if j < length and x > node[j]:
            inc += j + 1
        if 1 <= j < length and node[j - 1] > node[j]:
            inc -= j
            later += 1
        v = inc - shift
        out[j] = v
        bit = np.int64(1) << v if 0 <= v < 62 else np.int64(1) << 62
        if mask & bit:
            ok = False
        mask |= bit
    row_mask[b] = mask
    row_ok[b] = ok


@njit
def inverse_sweep(N, rows, row_offset, row_count):
    """Run the inverse map on every valid pair, then the forward map on its output.

    ``rows[row_offset[m, r, s, k] + c]`` is the ``c``-th pair for that key,
    laid out as ``lam`` (``k - r`` entries) followed by ``mu``.
    """
    status = np.zeros(STATUS_LEN, np.int64)
    fail_w = np.zeros(max(N, 1), np.int64)
    w = np.arange(1, N + 1).astype(np.int64)
    W = N + 2
    alpha = np.zeros(W, np.int64)
    dt = np.zeros(W + 1, np.int64)
    cnt = np.zeros(W + 1, np.int64)
    tv = np.zeros(W, np.int64)
    fv = np.zeros(W, np.int64)
    K = row_count.shape[3]
    while True:
        for m in range(N + 1):
            n = N - m
            r, ms = des_maj(w, 0, m)
            s, mp = des_maj(w, m, N)
            tail_descents(w, m, N, dt)
            status[0] += 1
            failed = False
            for k in range(K):
                base = row_offset[m, r, s, k]
                for c in range(row_count[m, r, s, k]):
                    status[2] += 1
                    code = _inverse_then_forward(
                        w, m, n, r, k, rows[base + c], alpha, dt, cnt, tv, fv
                    )
                    if code != 0 and not failed:
                        _fail(status, fail_w, w, code, m, k)
                        failed = True
        if not next_permutation(w):
            break
    return status, fail_w


@njit
def _inverse_then_forward(w, m, n, r, k, row, alpha, dt, cnt, tv, fv):
    for q in range(m):
        alpha[q] = w[q]
    L = m
    lim = m
    cnt[: m + 1] = 0
    for q in range(n):
        cnt[row[q]] += 1
    d_prev, e_prev = des_maj(alpha, 0, L)
    for i in range(n, 0, -1):
        x = w[m + i - 1]
        shift = dt[i]
        later = 0
        for q in range(L - 1, lim, -1):
            if alpha[q - 1] > alpha[q]:
                later += 1
        pick = -1
        # largest space whose shifted increment is still in the multiset
        for j in range(lim, -1, -1):
            inc = later
            if j >= 1 and alpha[j - 1] > x:
                inc += j
            if j < L and x > alpha[j]:
                inc += j + 1
            if 1 <= j < L and alpha[j - 1] > alpha[j]:
                inc -= j
                later += 1
            v = inc - shift
            if 0 <= v <= m and cnt[v] > 0:
                pick = j
                cnt[v] -= 1
                break
        if pick < 0:
            return 14
        for q in range(L, pick, -1):
            alpha[q] = alpha[q - 1]
        alpha[pick] = x
        L += 1
        lim = pick
        # forward map on the same chain: t(i) and the descent drop from direct scans
        d2, e2 = des_maj(alpha, 0, L)
        tv[i] = e2 - e_prev - shift
        fv[i] = d2 - d_prev
        d_prev = d2
        e_prev = e2
    if d_prev != k:
        return 15
    q = 0
    for i in range(n, 0, -1):
        if fv[i] == 1:
            if q >= k - r or row[q] != tv[i]:
                return 16
            q += 1
    if q != k - r:
        return 16
    for i in range(1, n + 1):
        if fv[i] == 0:
            if row[q] != tv[i]:
                return 16
            q += 1
    return 0


@njit
def novick_sweep(N):
    """Check the prefix-set shift rule for ``sigma = w[:N-2]``, ``p = w[N-2]``, ``q = w[N-1]``.

    For every prefix length ``i`` in ``1..N-1`` the first ``i`` increments of
    ``q`` into ``sigma`` with ``p`` inserted at space ``i - 1`` must be the
    first ``i`` increments of ``p`` into ``sigma``, each raised by ``[q > p]``.
    """
    status = np.zeros(STATUS_LEN, np.int64)
    fail_w = np.zeros(max(N, 1), np.int64)
    if N < 2:
        return status, fail_w
    w = np.arange(1, N + 1).astype(np.int64)
    n = N - 2
    W = N + 2
    base = np.zeros(W, np.int64)
    grown = np.zeros(W, np.int64)
    inc_p = np.zeros(W, np.int64)
    inc_q = np.zeros(W, np.int64)
    suf = np.zeros(W + 2, np.int64)
    while True:
        p = w[n]
        q = w[n + 1]
        chi = 1 if q > p else 0
        for t in range(n):
            base[t] = w[t]
        major_increments(base, n, p, 0, suf, inc_p)
        status[0] += 1
        for i in range(1, n + 2):
            for t in range(i - 1):
                grown[t] = base[t]
            grown[i - 1] = p
            for t in range(i - 1, n):
                grown[t + 1] = base[t]
            major_increments(grown, n + 1, q, 0, suf, inc_q)
            left = np.int64(0)
            right = np.int64(0)
            for j in range(i):
                left |= np.int64(1) << inc_q[j]
                right |= np.int64(1) << (inc_p[j] + chi)
            status[2] += 1
            if left != right:
                _fail(status, fail_w, w, 17, i, -1)
                break
        if not next_permutation(w):
            break
    return status, fail_w
