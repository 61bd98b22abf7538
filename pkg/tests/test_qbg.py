import json
import random
from collections import deque

import pytest

from qkflag import qbg, weyl
from qkflag.weyl import Permutation


def brute_edges(n):
    """Full QBG from the length conditions, written independently of the builder."""
    N = n + 1
    out = set()
    for w in weyl.all_permutations(N):
        for a in range(1, N + 1):
            for b in range(a + 1, N + 1):
                y = w * weyl.transposition(a, b, N)
                ht = b - a
                if y.length() == w.length() + 1:
                    out.add((w, y, (a, b), False))
                elif y.length() == w.length() + 1 - 2 * ht:
                    out.add((w, y, (a, b), True))
    return out


def bfs(n, src):
    adj = {}
    for x, y, _, _ in brute_edges(n):
        adj.setdefault(x, []).append(y)
    dist = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        for y in adj.get(x, []):
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


@pytest.mark.parametrize("n", [1, 2, 3])
def test_edges_match_brute_force(n):
    g = qbg.full_graph(n)
    mine = {(ed.src, ed.dst, ed.label.ends, ed.quantum) for ed in g.edges}
    assert mine == brute_edges(n)


def test_frozen_edge_counts():
    assert len(qbg.full_graph(1).edges) == 2
    assert len(qbg.full_graph(2).edges) == 15
    assert len(qbg.QuantumBruhatGraph.build(2, {1}).vertices) == 3


@pytest.mark.parametrize("n", [2, 3])
def test_distance_matches_bfs(n):
    for v in weyl.all_permutations(n + 1):
        d = bfs(n, v)
        for w in weyl.all_permutations(n + 1):
            assert qbg.distance(n, v, w) == d[w]


def test_shortest_weights_are_unique():
    n = 3
    for v in weyl.all_permutations(4):
        for w in weyl.all_permutations(4):
            assert len(qbg.shortest_path_weights(n, v, w)) == 1


def test_quantum_edge_example():
    # s_1 => e through a quantum edge of weight alpha_1^vee
    n = 1
    g = qbg.full_graph(n)
    s1 = weyl.simple(1, 2)
    ed = g.has_edge(s1, weyl.identity(2))
    assert ed is not None and ed.quantum
    assert qbg.path_weight(n, s1, weyl.identity(2)) == (1,)


def test_label_increasing_uniqueness_sampled_n4():
    n = 4
    g = qbg.full_graph(n)
    rng = random.Random(7)
    perms = weyl.all_permutations(n + 1)
    order = weyl.reflection_order(weyl.reduced_word(weyl.longest(n + 1)), n)
    for _ in range(60):
        v, w = rng.choice(perms), rng.choice(perms)
        path = qbg.unique_label_increasing_path(g, order, v, w)
        assert len(path) == qbg.distance(n, v, w)
        assert qbg.path_total_weight(path, n) == qbg.path_weight(n, v, w)


def test_dot_export():
    dot = qbg.full_graph(2).to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 15
    assert "style=dashed" in dot and "style=solid" in dot
    assert 'label="a_{1,2}"' in dot


def test_json_export():
    data = json.loads(json.dumps(qbg.QuantumBruhatGraph.build(2, {2}).to_json()))
    assert data["parabolic"] == [2]
    for ed in data["edges"]:
        assert set(ed["label"]) == {"i", "j", "sign"}
        assert not (ed["label"]["i"] == 2 and ed["label"]["j"] == 2)


def test_parabolic_rejects_bad_set():
    with pytest.raises(weyl.ConventionError):
        qbg.QuantumBruhatGraph.build(2, {3})


def test_tilted_order_reflexive_and_bottom():
    n = 2
    v = Permutation((2, 3, 1))
    for w in weyl.all_permutations(3):
        assert qbg.tilted_leq(n, v, v, w)
        assert qbg.tilted_leq(n, v, w, w)


def test_tb_examples():
    n = 2
    w = Permutation((3, 1, 2))
    # with J empty, tb_min(x, w) = x whenever x >= w in the tilted sense at w
    assert qbg.tb_min(w, frozenset(), w) == w
    assert qbg.up(w, weyl.min_coset_rep(w, {1}), {1}) == qbg.tb_min(weyl.min_coset_rep(w, {1}), {1}, w)
