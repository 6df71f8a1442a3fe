"""Inserting a new letter into a permutation and tracking the major index.

Space ``i`` (``0 <= i <= n``) of a length-``n`` permutation is the gap
before its ``(i+1)``-th letter; space ``n`` is the gap after the last one.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ContractViolation, InputError
from .perm import Permutation, des, maj

__all__ = [
    "SpaceKind",
    "CanonicalLabeling",
    "insert_at",
    "classify_space",
    "canonical_labeling",
    "major_increment",
    "mis",
    "mis_prefix_set",
]


class SpaceKind(enum.Enum):
    RL = "RL"
    LR = "LR"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CanonicalLabeling:
    kinds: tuple
    labels: tuple
    rl_count: int

    @property
    def rl_spaces(self) -> tuple:
        return tuple(i for i, k in enumerate(self.kinds) if k is SpaceKind.RL)

    @property
    def lr_spaces(self) -> tuple:
        return tuple(i for i, k in enumerate(self.kinds) if k is SpaceKind.LR)


def _check(sigma, i, r):
    sigma = Permutation(sigma)
    if r in sigma:
        raise InputError(f"letter {r} already occurs in {sigma}")
    if r < 0:
        raise InputError(f"letter {r} is negative")
    if i is not None and not 0 <= i <= len(sigma):
        raise InputError(f"space {i} out of range 0..{len(sigma)}")
    return sigma


def insert_at(sigma, i: int, r: int) -> Permutation:
    """Insert ``r`` into space ``i`` of ``sigma``."""
    sigma = _check(sigma, i, r)
    return Permutation(sigma[:i] + (r,) + sigma[i:])


def _is_rl(sigma, i, r) -> bool:
    n = len(sigma)
    if n == 0:
        # the lone space of the empty permutation is RL: insertion there adds nothing to maj
        return True
    if i == n:
        return sigma[n - 1] < r
    if i == 0:
        return r < sigma[0]
    a, b = sigma[i - 1], sigma[i]
    return (a > b > r) or (r > a > b) or (a < r < b)


def classify_space(sigma, i: int, r: int) -> SpaceKind:
    sigma = _check(sigma, i, r)
    return SpaceKind.RL if _is_rl(sigma, i, r) else SpaceKind.LR


def canonical_labeling(sigma, r: int) -> CanonicalLabeling:
    """RL spaces get ``0..l-1`` right to left, LR spaces get ``l..n`` left to right."""
    sigma = _check(sigma, None, r)
    n = len(sigma)
    kinds = tuple(SpaceKind.RL if _is_rl(sigma, i, r) else SpaceKind.LR for i in range(n + 1))
    labels = [0] * (n + 1)
    label = 0
    for i in range(n, -1, -1):
        if kinds[i] is SpaceKind.RL:
            labels[i] = label
            label += 1
    rl_count = label
    for i in range(n + 1):
        if kinds[i] is SpaceKind.LR:
            labels[i] = label
            label += 1
    return CanonicalLabeling(kinds, tuple(labels), rl_count)


def major_increment(sigma, i: int, r: int) -> int:
    """``maj`` gained by inserting ``r`` at space ``i``, computed by direct difference."""
    sigma = _check(sigma, i, r)
    return maj(sigma[:i] + (r,) + sigma[i:]) - maj(sigma)


def mis(sigma, r: int) -> tuple:
    """Major increments over all ``n+1`` spaces."""
    sigma = _check(sigma, None, r)
    base = maj(sigma)
    return tuple(maj(sigma[:i] + (r,) + sigma[i:]) - base for i in range(len(sigma) + 1))


def mis_prefix_set(sigma, i: int, r: int) -> frozenset:
    """Values of the first ``i`` major increments (``0 <= i <= n+1``)."""
    sigma = _check(sigma, None, r)
    if not 0 <= i <= len(sigma) + 1:
        raise InputError(f"prefix length {i} out of range 0..{len(sigma) + 1}")
    prefix = mis(sigma, r)[:i]
    out = frozenset(prefix)
    if len(out) != len(prefix):
        raise ContractViolation(f"repeated major increments in {prefix}")
    return out


def descent_change(sigma, i: int, r: int) -> int:
    sigma = _check(sigma, i, r)
    return des(sigma[:i] + (r,) + sigma[i:]) - des(sigma)
