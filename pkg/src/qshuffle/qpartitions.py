"""Exact polynomials in ``q``, Gaussian binomials and bounded partitions."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "QPoly",
    "Partition",
    "q_integer",
    "q_factorial",
    "gaussian_binomial",
    "enumerate_bounded_partitions",
    "enumerate_exact_partitions",
    "stanley_rhs",
    "garsia_gessel_rhs",
]


class QPoly:
    """Polynomial in one variable ``q`` with exact integer coefficients.

    Coefficients are stored densely by exponent with trailing zeros trimmed,
    so two polynomials are equal exactly when their coefficient tuples are.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPoly":
        if exponent < 0:
            raise InputError("negative exponent")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def from_dict(cls, terms: dict) -> "QPoly":
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(c)

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QPoly":
        return cls(int(x) for x in data)

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPoly(out)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(x * other for x in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        if k < 0:
            raise InputError("negative shift")
        return QPoly((0,) * k + self.coeffs)

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            mono = "q" if e == 1 else f"q^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


ZERO = QPoly()
ONE = QPoly([1])


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise InputError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InputError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "Partition":
        """Drop zero entries from a weakly decreasing non-negative sequence."""
        return cls(x for x in seq if x != 0)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition{tuple(self)}"


def q_integer(k: int) -> QPoly:
    """``[k]_q = 1 + q + ... + q^(k-1)``."""
    return QPoly([1] * max(k, 0))


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise InputError("q_factorial of a negative integer")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, m: int) -> QPoly:
    """The Gaussian polynomial ``[n choose m]_q``; zero outside ``0 <= m <= n``.

    Built from ``[n, m] = [n-1, m-1] + q^m [n-1, m]``, so no division is needed.
    """
    if m < 0 or n < 0 or m > n:
        return ZERO
    if m == 0 or m == n:
        return ONE
    return gaussian_binomial(n - 1, m - 1) + gaussian_binomial(n - 1, m).shift(m)


def _sort_key(p):
    return (sum(p), tuple(p))


def enumerate_bounded_partitions(max_len: int, max_part: int) -> list:
    """All partitions with at most ``max_len`` parts, each at most ``max_part``.

    Ordered by weight, then lexicographically.
    """
    if max_len < 0 or max_part < 0:
        raise InputError("bounds must be non-negative")
    out = []
    for seq in combinations_with_replacement(range(max_part, -1, -1), max_len):
        out.append(Partition.from_sequence(seq))
    out.sort(key=_sort_key)
    return out


def weakly_decreasing_sequences(length: int, low: int, high: int):
    """Weakly decreasing tuples of ``length`` entries drawn from ``low..high``."""
    if length == 0:
        return [()]
    if low > high:
        return []
    return list(combinations_with_replacement(range(high, low - 1, -1), length))


def enumerate_exact_partitions(length: int, min_part: int, max_part: int, *, keep_zeros: bool = False) -> list:
    """Partitions with exactly ``length`` parts in ``[min_part, max_part]``.

    With ``min_part == 0`` zeros are admitted as entries and then dropped,
    which gives the partitions with at most ``length`` parts; pass
    ``keep_zeros=True`` to get the fixed-length sequences instead.
    """
    if length < 0 or min_part < 0 or max_part < 0:
        raise InputError("bounds must be non-negative")
    seqs = weakly_decreasing_sequences(length, min_part, max_part)
    if keep_zeros:
        return sorted(seqs, key=_sort_key)
    return sorted((Partition.from_sequence(s) for s in seqs), key=_sort_key)


def partition_gf(parts: Iterable[Sequence[int]]) -> QPoly:
    terms: dict[int, int] = {}
    for p in parts:
        w = sum(p)
        terms[w] = terms.get(w, 0) + 1
    return QPoly.from_dict(terms)


def stanley_rhs(m: int, n: int, r: int, s: int, k: int, maj_sigma: int, maj_pi: int) -> QPoly:
    """Closed form for the shuffles with ``k`` descents.

    ``m, r`` are the length and descent count of the first permutation,
    ``n, s`` those of the second.
    """
    left = gaussian_binomial(m - r + s, k - r)
    right = gaussian_binomial(n - s + r, k - s)
    if left.is_zero() or right.is_zero():
        return ZERO
    return (left * right).shift(maj_sigma + maj_pi + (k - s) * (k - r))


def garsia_gessel_rhs(m: int, n: int, maj_sigma: int, maj_pi: int) -> QPoly:
    return gaussian_binomial(n + m, m).shift(maj_sigma + maj_pi)
