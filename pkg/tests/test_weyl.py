from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from qkflag import weyl
from qkflag.weyl import Permutation


def perms(N):
    return st.permutations(list(range(1, N + 1))).map(lambda p: Permutation(tuple(p)))


def inversions(p):
    return sum(1 for a, b in combinations(range(len(p)), 2) if p[a] > p[b])


def subword_bruhat(v, w):
    """v <= w iff some reduced word of w has a subword that multiplies to v."""
    word = weyl.reduced_word(w)
    N = w.size
    for r in range(len(word) + 1):
        for idx in combinations(range(len(word)), r):
            if weyl.from_word([word[i] for i in idx], N) == v:
                return True
    return False


def test_composition_convention():
    u, v = Permutation((2, 3, 1)), Permutation((2, 1, 3))
    assert (u * v)(1) == u(v(1))
    assert tuple(u * v) == (3, 2, 1)


@given(perms(5))
def test_length_is_inversion_count(w):
    assert w.length() == inversions(w)


@given(perms(5))
def test_reduced_word_roundtrip(w):
    word = weyl.reduced_word(w)
    assert len(word) == w.length()
    assert weyl.from_word(word, 5) == w


@given(perms(4), perms(4))
def test_inverse_and_product(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * u.inverse()).is_identity()


@pytest.mark.parametrize("N", [3, 4])
def test_bruhat_matches_subword_criterion(N):
    for v in weyl.all_permutations(N):
        for w in weyl.all_permutations(N):
            assert weyl.bruhat_leq(v, w) == subword_bruhat(v, w)


def test_longest_and_counts():
    assert weyl.longest(4).length() == 6
    assert len(weyl.all_permutations(4)) == 24
    assert len(weyl.all_reduced_words(weyl.longest(3))) == 2
    assert len(weyl.all_reduced_words(weyl.longest(4))) == 16


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reflection_orders_are_convex(n):
    for word in weyl.all_reduced_words(weyl.longest(n + 1)):
        order = weyl.reflection_order(word, n)
        assert sorted(order, key=lambda r: (r.i, r.j)) == sorted(weyl.positive_roots(n), key=lambda r: (r.i, r.j))
        assert weyl.is_convex_order(order, n)


def test_nonconvex_order_rejected():
    a1, a12, a2 = weyl.Root(1, 1), weyl.Root(1, 2), weyl.Root(2, 2)
    assert weyl.is_convex_order((a1, a12, a2), 2)
    assert not weyl.is_convex_order((a1, a2, a12), 2)


@pytest.mark.parametrize("n", [2, 3])
def test_min_coset_reps_brute_force(n):
    N = n + 1
    for r in range(n + 1):
        for J in combinations(range(1, n + 1), r):
            J = frozenset(J)
            reps = set(weyl.min_reps(n, J))
            brute = {w for w in weyl.all_permutations(N) if all(w.right_simple(j).length() > w.length() for j in J)}
            assert reps == brute
            for w in weyl.all_permutations(N):
                m = weyl.min_coset_rep(w, J)
                assert m in reps and weyl.bruhat_leq(m, w)


@given(perms(4))
def test_root_action_matches_permutation(w):
    for r in weyl.positive_roots(3):
        wr = weyl.act_root(w, r)
        assert wr.weight(4) == weyl.act(w, r.weight(4))
        assert wr.reflection(4) == w * r.reflection(4) * w.inverse()


def test_weights_are_canonical():
    assert weyl.canonical((3, 2, 1)) == (2, 1, 0)
    assert weyl.fundamental(2, 3) == (1, 1, 0, 0)
    assert weyl.weight_add((1, 0, 0), (0, 1, 0)) == (1, 1, 0)
    assert weyl.pairing(weyl.fundamental(1, 2), weyl.simple_root(1)) == 1


def test_levi_first_order_blocks():
    n, J = 3, frozenset({1, 2})
    order = weyl.levi_first_order(n, J)
    levi = [r for r in order if weyl.is_in_levi(r, J)]
    assert list(order[: len(levi)]) == levi
    assert weyl.is_convex_order(order, n)
