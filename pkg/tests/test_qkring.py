import random
from functools import lru_cache
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from qkflag import laurent, qkring, weyl
from qkflag.laurent import GroupAlgElem, e


@lru_cache(maxsize=None)
def cached_ideal(n, cap, mode="exact", seed=0):
    return qkring.main_ideal(n, cap=cap, mode=mode, seed=seed)


def at_fixed_point(p, w, tvals):
    """Evaluate a Q-free polynomial at the torus fixed point labelled by w."""
    h = p
    for j, v in enumerate(qkring.fixed_point_values(w, tvals), 1):
        h = h.eval_x(j, v)
    return h.coefficient((0,) * p.ring.nx, (0,) * p.ring.nq) if not h.is_zero() else GroupAlgElem.zero(tvals[0].N)


def test_generators_n1_by_hand():
    gens = qkring.ideal_generators(1, quantum=True, cap=3).generators
    r = gens[0].ring
    x1, x2, Q1 = r.x(1), r.x(2), r.Q(1)
    s = r.const(e((1, 0)) + e((-1, 0)))
    assert gens[0] == (1 - Q1) * (1 - x1) + (1 - x2) - s
    assert gens[1] == (1 - x1) * (1 - x2) - r.const(r.one)


def test_normal_form_n1_classical_example():
    ideal = qkring.main_ideal(1, quantum=False, cap=0)
    r = ideal.ring
    c = r.const(2 - e((1, 0)) - e((-1, 0)))
    x1 = r.x(1)
    assert ideal.normal_form(x1 * x1) == c * x1 - c
    assert ideal.normal_form(r.x(2)) == c - x1


@pytest.mark.parametrize("n", [1, 2])
def test_basis_size(n):
    ideal = qkring.main_ideal(n, cap=2)
    assert len(ideal.basis) == factorial(n + 1)
    for b in ideal.basis:
        assert ideal.normal_form(ideal.ring.monomial(b)) == ideal.ring.monomial(b)


@pytest.mark.parametrize("n", [1, 2])
def test_generators_reduce_to_zero(n):
    ideal = qkring.main_ideal(n, cap=3)
    for g in ideal.generators:
        assert ideal.contains(g)
    for k in range(1, n + 2):
        assert ideal.contains(ideal.reducer(k))


@pytest.mark.parametrize("n", [1, 2])
def test_classical_normal_form_preserves_fixed_point_values(n):
    ideal = qkring.main_ideal(n, quantum=False, cap=0)
    rng = random.Random(n)
    for _ in range(10):
        p = qkring.random_poly(ideal.ring, rng, terms=4, xmax=3, qmax=0)
        nf = ideal.normal_form(p)
        for w in weyl.all_permutations(n + 1):
            assert at_fixed_point(p, w, ideal.tvals) == at_fixed_point(nf, w, ideal.tvals)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]))
def test_normal_form_is_multiplicative(seed, n):
    ideal = cached_ideal(n, 3)
    rng = random.Random(seed)
    a = qkring.random_poly(ideal.ring, rng, terms=3, xmax=2, qmax=1)
    b = qkring.random_poly(ideal.ring, rng, terms=3, xmax=2, qmax=1)
    nf = ideal.normal_form
    assert nf(a * b) == nf(nf(a) * nf(b))
    assert nf(a + b) == nf(a) + nf(b)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_modp_agrees_with_exact(seed):
    n = 2
    exact = cached_ideal(n, 2)
    rng = random.Random(seed)
    p = qkring.random_poly(exact.ring, rng, terms=3, xmax=3, qmax=1)
    modp = cached_ideal(n, 2, "modp", seed % 5)
    assert modp.normal_form(p) == modp.to_ring(exact.normal_form(p))


def test_ideal_membership_by_construction():
    ideal = qkring.main_ideal(2, cap=2)
    r = ideal.ring
    p = (r.x(1) * r.x(3) + r.Q(2)) * ideal.generators[1] - r.x(2) * ideal.generators[2]
    assert ideal.contains(p)
    assert not ideal.contains(r.x(1))


def test_fixed_points_kill_classical_generators():
    for n in (1, 2, 3):
        ok, cex = qkring.check_fixed_points(n)
        assert ok, cex


def test_qpoly_json_roundtrip():
    ideal = qkring.main_ideal(2, cap=2)
    p = qkring.random_poly(ideal.ring, random.Random(3), terms=5, xmax=2, qmax=2)
    assert qkring.QPoly.from_json(p.to_json(), ideal.ring) == p


def test_truncation():
    r = qkring.PolyRing(1, 2, GroupAlgElem.one(2), cap=2)
    q = r.Q(1) * r.Q(2) * r.Q(1)
    assert q.is_zero()
    assert (r.Q(1) * r.Q(2)).q_degree() == 2


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        qkring.main_ideal(1, mode="float")


@pytest.mark.parametrize("n", [1, 2])
def test_freeness_exact(n):
    assert qkring.verify_freeness(n, cap=3).ok


def test_freeness_modp_n3():
    assert qkring.verify_freeness(3, cap=3, mode="modp", seed=0).ok


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_relation_theorem(n):
    assert qkring.verify_relation_reduction(n, cap=4).ok
