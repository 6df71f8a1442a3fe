"""Permutations over arbitrary distinct letters and their descent statistics.

Positions are 1-based throughout: ``i`` is a descent of ``p`` when
``p[i-1] > p[i]`` in Python indexing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import InputError

__all__ = [
    "Permutation",
    "DescentProfile",
    "parse_permutation",
    "descent_profile",
    "descent_set",
    "des",
    "maj",
    "tail_descent_count",
    "are_disjoint",
    "is_subsequence",
    "enumerate_shuffles",
    "shuffle_generating_function",
]


class Permutation(tuple):
    """A finite sequence of pairwise distinct non-negative integer letters."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        if isinstance(letters, Permutation):
            return letters
        if isinstance(letters, str):
            return parse_permutation(letters)
        items = []
        for x in letters:
            if isinstance(x, bool) or not isinstance(x, int):
                try:
                    if int(x) != x:
                        raise InputError(f"letter {x!r} is not an integer")
                    x = int(x)
                except (TypeError, ValueError):
                    raise InputError(f"letter {x!r} is not an integer") from None
            if x < 0:
                raise InputError(f"letter {x} is negative")
            items.append(x)
        if len(set(items)) != len(items):
            seen = set()
            dup = next(x for x in items if x in seen or seen.add(x))
            raise InputError(f"letter {dup} appears more than once")
        return super().__new__(cls, items)

    def __repr__(self):
        return f"Permutation({' '.join(map(str, self)) or 'ε'})"

    def __str__(self):
        return " ".join(map(str, self))

    @property
    def des(self) -> int:
        return des(self)

    @property
    def maj(self) -> int:
        return maj(self)


@dataclass(frozen=True)
class DescentProfile:
    descent_set: frozenset
    des: int
    maj: int


_SPLIT = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"9 3 8 10"`` or ``"9,3,8,10"``; an empty string is the empty permutation."""
    text = text.strip().strip("[]()")
    if not text:
        return Permutation(())
    tokens = [t for t in _SPLIT.split(text) if t]
    try:
        letters = [int(t, 10) for t in tokens]
    except ValueError:
        raise InputError(f"cannot parse permutation from {text!r}") from None
    return Permutation(letters)


def descent_set(p) -> frozenset:
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def des(p) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def maj(p) -> int:
    return sum(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def descent_profile(p) -> DescentProfile:
    ds = descent_set(p)
    return DescentProfile(ds, len(ds), sum(ds))


def tail_descent_count(p, k: int) -> int:
    """Number of descents of ``p`` at positions ``>= k`` (``1 <= k <= len(p)``)."""
    if not 1 <= k <= len(p):
        raise InputError(f"position {k} out of range 1..{len(p)}")
    return sum(1 for i in range(k - 1, len(p) - 1) if p[i] > p[i + 1])


def are_disjoint(p, q) -> bool:
    return set(p).isdisjoint(q)


def is_subsequence(sub, seq) -> bool:
    it = iter(seq)
    return all(any(x == y for y in it) for x in sub)


def _require_disjoint(sigma, pi):
    common = set(sigma) & set(pi)
    if common:
        raise InputError(f"permutations share letters {sorted(common)}")


def enumerate_shuffles(sigma, pi) -> Iterator[Permutation]:
    """Yield every shuffle of ``sigma`` and ``pi``.

    The positions occupied by ``pi``'s letters run over the
    ``len(pi)``-subsets of ``0..m+n-1`` in lexicographic order, so the
    output order is fixed and there are ``comb(m+n, n)`` shuffles.
    """
    sigma, pi = Permutation(sigma), Permutation(pi)
    _require_disjoint(sigma, pi)
    total = len(sigma) + len(pi)
    for slots in combinations(range(total), len(pi)):
        out = []
        si = pj = 0
        slot_iter = iter(slots)
        nxt = next(slot_iter, None)
        for pos in range(total):
            if pos == nxt:
                out.append(pi[pj])
                pj += 1
                nxt = next(slot_iter, None)
            else:
                out.append(sigma[si])
                si += 1
        yield Permutation(out)


def shuffle_count(sigma, pi) -> int:
    return comb(len(sigma) + len(pi), len(pi))


def shuffle_generating_function(sigma, pi, k: int):
    """Sum of ``q**maj(alpha)`` over shuffles ``alpha`` with exactly ``k`` descents."""
    from .qpartitions import QPoly

    if k < 0:
        raise InputError("descent count must be non-negative")
    coeffs: dict[int, int] = {}
    for alpha in enumerate_shuffles(sigma, pi):
        if des(alpha) == k:
            e = maj(alpha)
            coeffs[e] = coeffs.get(e, 0) + 1
    return QPoly.from_dict(coeffs)


def shuffle_distribution(sigma, pi) -> dict:
    """Map ``k -> QPoly`` for every descent count reached by some shuffle."""
    from .qpartitions import QPoly

    table: dict[int, dict[int, int]] = {}
    for alpha in enumerate_shuffles(sigma, pi):
        row = table.setdefault(des(alpha), {})
        e = maj(alpha)
        row[e] = row.get(e, 0) + 1
    return {k: QPoly.from_dict(v) for k, v in sorted(table.items())}
