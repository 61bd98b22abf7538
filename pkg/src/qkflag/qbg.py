"""
Parabolic quantum Bruhat graphs, shortest-path data, label-increasing paths
and the tilted Bruhat orders built from them.

>>> g = QuantumBruhatGraph.build(2)
>>> len(g.vertices), len(g.edges)
(6, 15)
>>> s1 = weyl.simple(1, 3)
>>> distance(2, s1, weyl.identity(3)), path_weight(2, s1, weyl.identity(3))
(1, (1, 0))
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import weyl
from .weyl import Coroot, Permutation, Root


class PathError(RuntimeError):
    """A path-uniqueness or order-uniqueness property failed."""


@dataclass(frozen=True)
class Edge:
    src: Permutation
    dst: Permutation
    label: Root
    quantum: bool

    @property
    def kind(self) -> str:
        return "quantum" if self.quantum else "bruhat"


class QuantumBruhatGraph:
    """QBG(W^J) for type A_n."""

    def __init__(self, n: int, J: frozenset[int], vertices, edges: list[Edge]):
        self.n = n
        self.J = J
        self.vertices: tuple[Permutation, ...] = tuple(vertices)
        self.edges = edges
        self.out: dict[Permutation, list[Edge]] = {v: [] for v in self.vertices}
        for ed in edges:
            self.out[ed.src].append(ed)

    @classmethod
    def build(cls, n: int, J: Iterable[int] = ()) -> "QuantumBruhatGraph":
        J = frozenset(J)
        if not J <= set(range(1, n + 1)):
            raise weyl.ConventionError(f"parabolic set {set(J)} not inside 1..{n}")
        N = n + 1
        verts = weyl.min_reps(n, J)
        labels = [r for r in weyl.positive_roots(n) if not weyl.is_in_levi(r, J)]
        edges = []
        for x in verts:
            lx = x.length()
            for r in labels:
                y = weyl.min_coset_rep(x * r.reflection(N), J)
                ly = y.length()
                if ly == lx + 1:
                    edges.append(Edge(x, y, r, False))
                elif ly == lx + 1 - weyl.quantum_drop(r, n, J):
                    edges.append(Edge(x, y, r, True))
        return cls(n, J, verts, edges)

    def has_edge(self, x: Permutation, y: Permutation) -> Edge | None:
        for ed in self.out.get(x, ()):
            if ed.dst == y:
                return ed
        return None

    def subgraph_at_level(self, a: Fraction, nu: Sequence[int]) -> "QuantumBruhatGraph":
        """Keep edges whose label satisfies a <nu, alpha^vee> in Z."""
        a = Fraction(a)
        kept = [ed for ed in self.edges if (a * weyl.pairing(nu, ed.label)).denominator == 1]
        return QuantumBruhatGraph(self.n, self.J, self.vertices, kept)

    def bruhat_only(self) -> "QuantumBruhatGraph":
        return QuantumBruhatGraph(self.n, self.J, self.vertices, [e for e in self.edges if not e.quantum])

    def reachable(self, src: Permutation) -> set[Permutation]:
        seen = {src}
        todo = [src]
        while todo:
            x = todo.pop()
            for ed in self.out[x]:
                if ed.dst not in seen:
                    seen.add(ed.dst)
                    todo.append(ed.dst)
        return seen

    def to_dot(self) -> str:
        lines = ["digraph QBG {"]
        name = lambda w: '"' + "".join(map(str, w)) + '"'
        for v in self.vertices:
            lines.append(f"  {name(v)};")
        for ed in self.edges:
            style = "dashed" if ed.quantum else "solid"
            lines.append(f'  {name(ed.src)} -> {name(ed.dst)} [label="{ed.label.label()}", style={style}];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "parabolic": sorted(self.J),
            "vertices": [list(v) for v in self.vertices],
            "edges": [{"src": list(e.src), "dst": list(e.dst),
                       "label": {"i": e.label.i, "j": e.label.j, "sign": e.label.sign},
                       "kind": e.kind} for e in self.edges],
        }


@lru_cache(maxsize=None)
def full_graph(n: int) -> QuantumBruhatGraph:
    return QuantumBruhatGraph.build(n)


def edge_weight(ed: Edge, n: int) -> Coroot:
    return ed.label.coroot(n) if ed.quantum else weyl.zero_coroot(n)


@lru_cache(maxsize=None)
def _single_source(n: int, src: Permutation) -> tuple[dict, dict]:
    """BFS distances from src and the set of weights over all shortest paths."""
    g = full_graph(n)
    dist = {src: 0}
    weights: dict[Permutation, set[Coroot]] = {src: {weyl.zero_coroot(n)}}
    queue = deque([src])
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for ed in g.out[x]:
            if ed.dst not in dist:
                dist[ed.dst] = dist[x] + 1
                queue.append(ed.dst)
    for x in order:
        for ed in g.out[x]:
            if dist[ed.dst] == dist[x] + 1:
                w = edge_weight(ed, n)
                weights.setdefault(ed.dst, set()).update(
                    weyl.coroot_add(a, w) for a in weights[x])
    return dist, weights


def distance(n: int, v: Permutation, w: Permutation) -> int:
    """Length of a shortest directed path v => w in QBG(W)."""
    dist, _ = _single_source(n, v)
    if w not in dist:
        raise PathError(f"no path {v} => {w}")
    return dist[w]


def path_weight(n: int, v: Permutation, w: Permutation) -> Coroot:
    """Weight of a shortest path v => w; raises if shortest paths disagree."""
    distance(n, v, w)
    _, weights = _single_source(n, v)
    ws = weights[w]
    if len(ws) != 1:
        raise PathError(f"shortest paths {v} => {w} carry different weights {ws}")
    return next(iter(ws))


def shortest_path_weights(n: int, v: Permutation, w: Permutation) -> set[Coroot]:
    return set(_single_source(n, v)[1][w])


# ---------------------------------------------------------------- label-increasing paths


def label_increasing_paths(g: QuantumBruhatGraph, order: Sequence[Root],
                           src: Permutation, dst: Permutation) -> list[list[Edge]]:
    """All directed paths src -> dst whose labels strictly increase in the given order."""
    pos = {r: k for k, r in enumerate(order)}
    found: list[list[Edge]] = []

    def walk(x, last, path):
        if x == dst:
            found.append(list(path))
        for ed in g.out[x]:
            p = pos[ed.label]
            if p > last:
                path.append(ed)
                walk(ed.dst, p, path)
                path.pop()

    walk(src, -1, [])
    return found


def unique_label_increasing_path(g, order, src, dst) -> list[Edge]:
    paths = label_increasing_paths(g, order, src, dst)
    if len(paths) != 1:
        raise PathError(f"{len(paths)} label-increasing paths {src} -> {dst}")
    return paths[0]


def path_total_weight(path: Sequence[Edge], n: int) -> Coroot:
    return weyl.coroot_add(weyl.zero_coroot(n), *[edge_weight(e, n) for e in path])


# ---------------------------------------------------------------- tilted orders


def tilted_leq(n: int, v: Permutation, w1: Permutation, w2: Permutation) -> bool:
    """w1 precedes w2 in the order tilted at v."""
    return distance(n, v, w2) == distance(n, v, w1) + distance(n, w1, w2)


def dual_tilted_leq(n: int, v: Permutation, w1: Permutation, w2: Permutation) -> bool:
    """w1 precedes w2 in the dual order tilted at v."""
    return distance(n, w1, v) == distance(n, w1, w2) + distance(n, w2, v)


def _unique(cands: list[Permutation], what: str) -> Permutation:
    if len(cands) != 1:
        raise PathError(f"{what}: {len(cands)} candidates")
    return cands[0]


def tb_min(u: Permutation, J: Iterable[int], v: Permutation) -> Permutation:
    """Minimum of the coset u W_J in the order tilted at v."""
    n = len(u) - 1
    cs = weyl.coset(u, frozenset(J))
    return _unique([y for y in cs if all(tilted_leq(n, v, y, z) for z in cs)], "tb_min")


def tb_max(u: Permutation, J: Iterable[int], v: Permutation) -> Permutation:
    """Maximum of the coset u W_J in the dual tilted order at v."""
    n = len(u) - 1
    cs = weyl.coset(u, frozenset(J))
    return _unique([y for y in cs if all(dual_tilted_leq(n, v, z, y) for z in cs)], "tb_max")


def up(w: Permutation, x: Permutation, J: Iterable[int]) -> Permutation:
    """Bruhat-minimum of {y in x W_J : y >= w}."""
    cs = [y for y in weyl.coset(x, frozenset(J)) if weyl.bruhat_leq(w, y)]
    return _unique([y for y in cs if all(weyl.bruhat_leq(y, z) for z in cs)], "up")


def dn(w: Permutation, x: Permutation, J: Iterable[int]) -> Permutation:
    """Bruhat-maximum of {y in x W_J : y <= w}."""
    cs = [y for y in weyl.coset(x, frozenset(J)) if weyl.bruhat_leq(y, w)]
    return _unique([y for y in cs if all(weyl.bruhat_leq(z, y) for z in cs)], "dn")


def tb_max_by_labels(u: Permutation, J: Iterable[int], v: Permutation) -> Permutation:
    """The coset element whose Levi-first label-increasing path to v avoids Levi labels."""
    J = frozenset(J)
    n = len(u) - 1
    order = weyl.levi_first_order(n, J)
    g = full_graph(n)
    hits = []
    for y in weyl.coset(u, J):
        path = unique_label_increasing_path(g, order, y, v)
        if all(not weyl.is_in_levi(ed.label, J) for ed in path):
            hits.append(y)
    return _unique(hits, "tb_max_by_labels")
