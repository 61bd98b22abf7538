import json
from fractions import Fraction
from itertools import combinations
from math import comb, prod

import pytest
from hypothesis import given, settings, strategies as st

from qkflag import laurent, qls, weyl
from qkflag.laurent import GroupAlgElem, e


def weyl_dimension(nu):
    N = len(nu)
    num = prod(nu[a] - nu[b] + b - a for a, b in combinations(range(N), 2))
    den = prod(b - a for a, b in combinations(range(N), 2))
    return num // den


def multiplicities(nu):
    return [nu[i] - nu[i + 1] for i in range(len(nu) - 1)]


def demazure_character(nu):
    N = len(nu)
    w0 = weyl.longest(N)
    return laurent.demazure_word(weyl.reduced_word(w0), e(weyl.act(w0, nu)))


def character(paths, nu):
    N = len(nu)
    return sum((e(qls.path_wt(p, nu)) for p in paths), GroupAlgElem.zero(N))


dominant = st.integers(2, 3).flatmap(
    lambda N: st.lists(st.integers(0, 2), min_size=N - 1, max_size=N - 1)).map(
    lambda m: weyl.canonical(tuple(sum(m[i:]) for i in range(len(m))) + (0,)))


def test_frozen_count_varpi1_plus_varpi2():
    assert len(qls.enumerate_qls((2, 1, 0))) == 9
    assert len(qls.enumerate_ls((2, 1, 0))) == 8


@settings(max_examples=15, deadline=None)
@given(dominant)
def test_ls_count_and_character(nu):
    ls = qls.enumerate_ls(nu)
    assert len(ls) == weyl_dimension(nu)
    assert character(ls, nu) == demazure_character(nu)


@settings(max_examples=15, deadline=None)
@given(dominant)
def test_qls_count_is_tensor_product_of_fundamentals(nu):
    N = len(nu)
    m = multiplicities(nu)
    q = qls.enumerate_qls(nu)
    assert len(q) == prod(comb(N, i + 1) ** k for i, k in enumerate(m))
    fund = GroupAlgElem.one(N)
    for i, k in enumerate(m):
        fund = fund * demazure_character(weyl.fundamental(i + 1, N - 1)) ** k
    assert character(q, nu) == fund


@pytest.mark.parametrize("n", [1, 2, 3])
def test_minuscule_qls_equals_ls(n):
    for i in range(1, n + 1):
        nu = weyl.fundamental(i, n)
        assert set(qls.enumerate_qls(nu)) == set(qls.enumerate_ls(nu))
        assert all(qls.path_deg(p, nu) == 0 for p in qls.enumerate_qls(nu))


def test_degree_is_nonpositive_and_hits_minus_one():
    degs = [qls.path_deg(p, (2, 1, 0)) for p in qls.enumerate_qls((2, 1, 0))]
    assert max(degs) == 0 and min(degs) == -1


def test_json_roundtrip():
    for p in qls.enumerate_qls((2, 1, 0)):
        data = json.loads(json.dumps(p.to_json()))
        assert all(isinstance(c, str) for c in data["cuts"])
        assert qls.QLSPath.from_json(data) == p


def test_path_requires_valid_times():
    w = weyl.identity(3)
    with pytest.raises(weyl.ConventionError):
        qls.QLSPath((w,), (Fraction(0), Fraction(1, 2)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dp_sets(n):
    for r in range(n + 1):
        for K in combinations(range(1, n + 1), r):
            assert qls.check_dp_set(n, K)


@pytest.mark.parametrize("n", [1, 2])
def test_mixed_expansion_consistency(n):
    full = set(range(1, n + 1))
    for r in range(n + 1):
        for K in combinations(range(1, n + 1), r):
            for m in sorted(full - set(K)):
                eq, _ = qls.expand_mixed_equivariant(n, K, m, 2)
                assert eq == qls.expand_mixed(n, K, m, 2)
                assert qls.mixed_is_injective(n, K, m)
