"""Shuffles with ``k`` descents <-> pairs of bounded partitions.

For disjoint ``sigma`` (length ``m``, ``r`` descents) and ``pi`` (length
``n``, ``s`` descents), :func:`phi` sends a shuffle ``alpha`` with ``k``
descents to ``(lam, mu)`` with

    m >= lam_1 >= ... >= lam_{k-r} >= k-s >= mu_1 >= ... >= mu_{n-k+r} >= 0

and ``maj(alpha) = |lam| + |mu| + maj(sigma) + maj(pi)``; :func:`psi`
rebuilds ``alpha`` from the pair by inserting ``pi_n, ..., pi_1`` into
``sigma`` one letter at a time.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import ContractViolation, InputError
from .insertion import major_increment, mis
from .perm import Permutation, des, maj, tail_descent_count

__all__ = [
    "ShuffleDecomposition",
    "PartitionPair",
    "PsiStep",
    "decompose",
    "phi",
    "psi",
    "psi_trace",
    "t_sequences",
    "t_sequence_check",
    "is_valid_pair",
]


@dataclass(frozen=True)
class ShuffleDecomposition:
    sigma: Permutation
    pi: Permutation
    chain: tuple
    t_values: tuple
    descent_drop_flags: tuple
    insertion_positions: tuple
    tail_descents: tuple = field(repr=False)

    @property
    def alpha(self) -> Permutation:
        return self.chain[0]

    @property
    def k(self) -> int:
        return des(self.chain[0])


@dataclass(frozen=True)
class PartitionPair:
    """``lam`` and ``mu`` as fixed-length weakly decreasing tuples (zeros kept)."""

    lam: tuple
    mu: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        object.__setattr__(self, "mu", tuple(int(x) for x in self.mu))

    @property
    def weight(self) -> int:
        return sum(self.lam) + sum(self.mu)

    @property
    def mu_partition(self) -> tuple:
        return tuple(x for x in self.mu if x)

    @property
    def multiset(self) -> Counter:
        return Counter(self.lam + self.mu)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu), "k": self.k}

    @classmethod
    def from_json(cls, data: dict) -> "PartitionPair":
        return cls(tuple(data["lambda"]), tuple(data["mu"]), int(data["k"]))


def _checked_pair(sigma, pi):
    sigma, pi = Permutation(sigma), Permutation(pi)
    common = set(sigma) & set(pi)
    if common:
        raise InputError(f"permutations share letters {sorted(common)}")
    return sigma, pi


def _check_shuffle(sigma, pi, alpha):
    alpha = Permutation(alpha)
    if len(alpha) != len(sigma) + len(pi):
        raise InputError(f"alpha has length {len(alpha)}, expected {len(sigma) + len(pi)}")
    si = pj = 0
    for pos, x in enumerate(alpha, start=1):
        if si < len(sigma) and x == sigma[si]:
            si += 1
        elif pj < len(pi) and x == pi[pj]:
            pj += 1
        else:
            want = [str(w[j]) for w, j in ((sigma, si), (pi, pj)) if j < len(w)]
            raise InputError(
                f"alpha is not a shuffle: letter {x} at position {pos}, expected {' or '.join(want)}"
            )
    return alpha


def decompose(sigma, pi, alpha) -> ShuffleDecomposition:
    """Remove ``pi_1, pi_2, ...`` from ``alpha`` one at a time and record the steps."""
    sigma, pi = _checked_pair(sigma, pi)
    alpha = _check_shuffle(sigma, pi, alpha)
    n = len(pi)
    tails = tuple(tail_descent_count(pi, i) for i in range(1, n + 1))
    chain = [alpha]
    t_values, flags, positions = [], [], []
    cur = alpha
    for i in range(1, n + 1):
        pos = cur.index(pi[i - 1])
        nxt = Permutation(cur[:pos] + cur[pos + 1:])
        t_values.append(maj(cur) - maj(nxt) - tails[i - 1])
        drop = des(cur) - des(nxt)
        if drop not in (0, 1):
            raise ContractViolation(f"removing {pi[i - 1]} changed des by {drop}")
        flags.append(drop == 1)
        positions.append(pos + 1)
        chain.append(nxt)
        cur = nxt
    if cur != sigma:
        raise ContractViolation("removal chain does not end at sigma")
    return ShuffleDecomposition(sigma, pi, tuple(chain), tuple(t_values), tuple(flags), tuple(positions), tails)


def phi(sigma, pi, alpha) -> PartitionPair:
    dec = decompose(sigma, pi, alpha)
    drops = [t for t, f in zip(dec.t_values, dec.descent_drop_flags) if f]
    rest = [t for t, f in zip(dec.t_values, dec.descent_drop_flags) if not f]
    return PartitionPair(tuple(reversed(drops)), tuple(rest), dec.k)


def is_valid_pair(m: int, n: int, r: int, s: int, pair: PartitionPair) -> bool:
    """Whether ``pair`` satisfies the inequality chain for ``k = pair.k``."""
    k = pair.k
    if k - r < 0 or n - k + r < 0 or k - s < 0:
        return False
    if len(pair.lam) != k - r or len(pair.mu) != n - k + r:
        return False
    chain = (m,) + pair.lam + (k - s,) + pair.mu + (0,)
    return all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))


@dataclass(frozen=True)
class PsiStep:
    i: int
    letter: int
    t_seq: tuple
    full_mis_len: int
    multiset: tuple
    position: int
    before: Permutation
    after: Permutation


def psi_trace(sigma, pi, k: int, pair: PartitionPair) -> list:
    """Run the inverse map, returning one :class:`PsiStep` per inserted letter."""
    sigma, pi = _checked_pair(sigma, pi)
    m, n = len(sigma), len(pi)
    r, s = des(sigma), des(pi)
    if pair.k != k:
        pair = PartitionPair(pair.lam, pair.mu, k)
    if not is_valid_pair(m, n, r, s, pair):
        raise InputError(
            f"pair lambda={list(pair.lam)} mu={list(pair.mu)} violates "
            f"{m} >= lambda >= {k - s} >= mu >= 0 with {k - r} and {n - k + r} entries"
        )
    pool = Counter(pair.lam + pair.mu)
    alpha = sigma
    limit = m
    steps = []
    for i in range(n, 0, -1):
        letter = pi[i - 1]
        d = tail_descent_count(pi, i)
        t_seq = tuple(major_increment(alpha, j, letter) - d for j in range(limit + 1))
        pick = next((j for j in range(limit, -1, -1) if pool[t_seq[j]] > 0), None)
        if pick is None:
            raise ContractViolation(f"no admissible space for {letter} at step {i}")
        remaining = tuple(sorted(pool.elements(), reverse=True))
        pool[t_seq[pick]] -= 1
        nxt = Permutation(alpha[:pick] + (letter,) + alpha[pick:])
        steps.append(PsiStep(i, letter, t_seq, len(alpha) + 1, remaining, pick + 1, alpha, nxt))
        alpha = nxt
        limit = pick
    if des(alpha) != k:
        raise ContractViolation(f"psi produced {alpha} with {des(alpha)} descents, expected {k}")
    return steps


def psi(sigma, pi, k: int, pair: PartitionPair) -> Permutation:
    steps = psi_trace(sigma, pi, k, pair)
    return steps[-1].after if steps else Permutation(sigma)


def t_sequences(dec: ShuffleDecomposition) -> list:
    """``T^(i)`` for ``i = 1..n``: shifted major increments over spaces ``0..k_i - 1``."""
    out = []
    for i in range(1, len(dec.pi) + 1):
        row = mis(dec.chain[i], dec.pi[i - 1])[: dec.insertion_positions[i - 1]]
        out.append(tuple(x - dec.tail_descents[i - 1] for x in row))
    return out


def t_sequence_check(dec: ShuffleDecomposition) -> list:
    """Value sets of ``T^(1), ..., T^(n)``, after checking they are nested inside ``0..m``.

    Also checks that each ``t(i)`` closes its sequence as the maximum when
    the removal dropped a descent and as the minimum otherwise.
    """
    m = len(dec.sigma)
    seqs = t_sequences(dec)
    sets = []
    for i, seq in enumerate(seqs, start=1):
        st = frozenset(seq)
        if len(st) != len(seq):
            raise ContractViolation(f"T^({i}) has repeated entries: {seq}")
        t = dec.t_values[i - 1]
        if seq[-1] != t:
            raise ContractViolation(f"T^({i}) ends in {seq[-1]}, t({i}) = {t}")
        extreme = max(seq) if dec.descent_drop_flags[i - 1] else min(seq)
        if t != extreme:
            raise ContractViolation(f"t({i}) = {t} is not the expected extreme of {seq}")
        sets.append(st)
    for i in range(len(sets) - 1):
        if not sets[i] <= sets[i + 1]:
            raise ContractViolation(f"ST^({i + 1}) is not contained in ST^({i + 2})")
    if sets and not sets[-1] <= frozenset(range(m + 1)):
        raise ContractViolation(f"ST^({len(sets)}) leaves 0..{m}")
    return sets
