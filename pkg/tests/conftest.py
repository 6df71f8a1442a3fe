import random
from itertools import permutations

import pytest
from hypothesis import strategies as st

from qshuffle.perm import Permutation


@st.composite
def perms(draw, max_len=7, max_letter=30):
    n = draw(st.integers(0, max_len))
    letters = draw(st.lists(st.integers(0, max_letter), min_size=n, max_size=n, unique=True))
    return Permutation(letters)


@st.composite
def disjoint_pairs(draw, max_total=7, max_letter=30):
    N = draw(st.integers(0, max_total))
    letters = draw(st.lists(st.integers(0, max_letter), min_size=N, max_size=N, unique=True))
    m = draw(st.integers(0, N))
    return Permutation(letters[:m]), Permutation(letters[m:])


@st.composite
def shuffles_of(draw, max_total=7):
    sigma, pi = draw(disjoint_pairs(max_total))
    N = len(sigma) + len(pi)
    slots = sorted(draw(st.permutations(range(N)))[: len(pi)])
    out, si, pj = [], 0, 0
    for pos in range(N):
        if pj < len(pi) and pos == slots[pj]:
            out.append(pi[pj])
            pj += 1
        else:
            out.append(sigma[si])
            si += 1
    return sigma, pi, Permutation(out)


def brute_maj(p):
    return sum(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def brute_des(p):
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def brute_shuffles(sigma, pi):
    """Every arrangement of the letters keeping both words as subsequences."""
    out = set()
    for w in permutations(tuple(sigma) + tuple(pi)):
        if [x for x in w if x in sigma] == list(sigma) and [x for x in w if x in pi] == list(pi):
            out.add(w)
    return out


def random_pair(rng: random.Random, N: int, top: int = 40):
    letters = rng.sample(range(1, top), N)
    m = rng.randint(0, N)
    return Permutation(letters[:m]), Permutation(letters[m:])


# the running example used throughout
SIGMA = Permutation("9 3 8 10 12 4 7")
PI = Permutation("1 2 6 5 13 11")
ALPHA = Permutation("1 9 2 6 3 5 13 8 10 12 11 4 7")


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
