import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import brute_des, brute_maj, perms
from qshuffle.errors import InputError
from qshuffle.insertion import (
    SpaceKind,
    canonical_labeling,
    classify_space,
    descent_change,
    insert_at,
    major_increment,
    mis,
    mis_prefix_set,
)
from qshuffle.perm import Permutation, des, maj, shuffle_generating_function
from qshuffle.qpartitions import QPoly, q_integer

S = Permutation("5 1 6 2 4")
T = Permutation("10 1 9 8 2 7 4 3 6")
U = Permutation("5 8 1 4 6 2")


def with_letter(max_len=9):
    return perms(max_len=max_len).flatmap(
        lambda p: st.tuples(st.just(p), st.integers(0, 40).filter(lambda r: r not in p))
    )


def test_insert_at():
    assert insert_at(S, 0, 3) == Permutation("3 5 1 6 2 4")
    assert insert_at(S, 5, 3) == Permutation("5 1 6 2 4 3")
    assert insert_at(Permutation(), 0, 7) == Permutation([7])
    with pytest.raises(InputError):
        insert_at(S, 6, 3)
    with pytest.raises(InputError):
        insert_at(S, 0, 5)


def test_classification_example():
    kinds = [classify_space(T, i, 5) for i in range(10)]
    assert [i for i, k in enumerate(kinds) if k is SpaceKind.RL] == [0, 2, 3, 5, 7, 8]
    assert [i for i, k in enumerate(kinds) if k is SpaceKind.LR] == [1, 4, 6, 9]
    assert classify_space(Permutation("6 3"), 2, 14) is SpaceKind.RL


def test_canonical_labeling_example():
    lab = canonical_labeling(T, 5)
    assert lab.labels == (5, 6, 4, 3, 7, 2, 8, 1, 0, 9)
    assert lab.rl_count == 6 == des(T) + 1
    assert lab.rl_spaces == (0, 2, 3, 5, 7, 8) and lab.lr_spaces == (1, 4, 6, 9)
    empty = canonical_labeling(Permutation(), 3)
    assert empty.kinds == (SpaceKind.RL,) and empty.labels == (0,) and empty.rl_count == 1


def test_increments_and_sequences():
    assert major_increment(S, 3, 3) == 4
    assert major_increment(S, 4, 3) == 0
    assert major_increment(Permutation("1 2"), 2, 3) == 0
    assert mis(S, 3) == (2, 3, 1, 4, 0, 5)
    assert mis(U, 7) == (3, 2, 4, 5, 6, 1, 0)
    assert mis(U, 9) == (3, 4, 2, 5, 6, 1, 0)
    assert mis(Permutation("5 8 1 4 7 6 2"), 9) == (4, 5, 3, 6, 7, 2, 1, 0)
    assert mis(Permutation("5 8 1 4 9 6 2"), 7) == (4, 3, 5, 6, 2, 7, 1, 0)


def test_prefix_sets():
    assert mis_prefix_set(U, 5, 7) == {2, 3, 4, 5, 6}
    assert mis_prefix_set(Permutation("5 8 1 4 7 6 2"), 5, 9) == {3, 4, 5, 6, 7}
    assert mis_prefix_set(U, 5, 9) == {2, 3, 4, 5, 6}
    assert mis_prefix_set(Permutation("5 8 1 4 9 6 2"), 5, 7) == {2, 3, 4, 5, 6}
    assert mis_prefix_set(U, 0, 7) == frozenset()
    assert mis_prefix_set(U, 7, 7) == frozenset(range(7))
    with pytest.raises(InputError):
        mis_prefix_set(U, 8, 7)


@given(with_letter())
def test_insertion_relation(case):
    sigma, r = case
    n = len(sigma)
    incs = mis(sigma, r)
    assert sorted(incs) == list(range(n + 1))
    gf = sum((QPoly.monomial(brute_maj(insert_at(sigma, i, r))) for i in range(n + 1)), QPoly())
    assert gf == q_integer(n + 1).shift(maj(sigma))


@given(with_letter())
def test_labels_equal_increments(case):
    sigma, r = case
    lab = canonical_labeling(sigma, r)
    assert sorted(lab.labels) == list(range(len(sigma) + 1))
    assert lab.rl_count == des(sigma) + 1
    for i in range(len(sigma) + 1):
        assert major_increment(sigma, i, r) == lab.labels[i]
        grown = brute_des(insert_at(sigma, i, r))
        assert grown - brute_des(sigma) == (0 if lab.kinds[i] is SpaceKind.RL else 1)
        assert descent_change(sigma, i, r) == grown - brute_des(sigma)


@given(with_letter())
def test_new_entry_is_min_minus_one_or_max_plus_one(case):
    sigma, r = case
    k = des(sigma)
    seq = mis(sigma, r)
    assert [x for x in seq if x > k] == list(range(k + 1, len(sigma) + 1))
    assert [x for x in seq if x <= k] == list(range(k, -1, -1))
    for i in range(1, len(seq)):
        if descent_change(sigma, i, r):
            assert seq[i] == max(seq[:i]) + 1
        else:
            assert seq[i] == min(seq[:i]) - 1


@given(perms(max_len=7), st.data())
def test_prefix_shift_rule(sigma, data):
    p = data.draw(st.integers(0, 40).filter(lambda x: x not in sigma))
    q = data.draw(st.integers(0, 40).filter(lambda x: x not in sigma and x != p))
    i = data.draw(st.integers(1, len(sigma) + 1))
    grown = insert_at(sigma, i - 1, p)
    assert mis_prefix_set(grown, i, q) == {x + (q > p) for x in mis_prefix_set(sigma, i, p)}


@given(perms(max_len=8), st.data())
def test_single_letter_shuffles(sigma, data):
    x = data.draw(st.integers(0, 40).filter(lambda v: v not in sigma))
    assume(len(sigma) >= 1)
    r, m = des(sigma), len(sigma)
    pi = Permutation([x])
    assert shuffle_generating_function(sigma, pi, r) == q_integer(r + 1).shift(maj(sigma))
    assert shuffle_generating_function(sigma, pi, r + 1) == q_integer(m - r).shift(maj(sigma) + r + 1)
