"""
Quantum Lakshmibai-Seshadri paths by brute force, their statistics, the
recursions computing final and initial directions relative to v, and the
line-bundle expansions that follow from them.

>>> paths = enumerate_qls(fundamental(1, 2))
>>> [tuple(p.elems[0]) for p in paths]
[(1, 2, 3), (2, 1, 3), (3, 1, 2)]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import qbg, weyl
from .kclasses import ShiftModuleElem
from .laurent import GroupAlgElem, e
from .weyl import Coroot, Permutation, Weight, fundamental  # noqa: F401


@dataclass(frozen=True)
class QLSPath:
    """(w_1, ..., w_s ; a_0 = 0 < a_1 < ... < a_s = 1)."""
    elems: tuple[Permutation, ...]
    times: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.times) != len(self.elems) + 1 or self.times[0] != 0 or self.times[-1] != 1:
            raise weyl.ConventionError("times must run from 0 to 1 with one more entry than elems")
        if any(a >= b for a, b in zip(self.times, self.times[1:])):
            raise weyl.ConventionError("times must increase strictly")

    @property
    def final(self) -> Permutation:
        return self.elems[-1]

    @property
    def initial(self) -> Permutation:
        return self.elems[0]

    def to_json(self) -> dict:
        return {"elems": [list(w) for w in self.elems], "cuts": [str(a) for a in self.times]}

    @classmethod
    def from_json(cls, data: dict) -> "QLSPath":
        return cls(tuple(weyl.Permutation(w) for w in data["elems"]),
                   tuple(Fraction(a) for a in data["cuts"]))


def stabilizer(nu: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(nu)) if nu[i - 1] == nu[i])


def _critical_times(nu: Sequence[int]) -> list[Fraction]:
    n = len(nu) - 1
    vals = {weyl.pairing(nu, r) for r in weyl.positive_roots(n)} - {0}
    out = {Fraction(p, d) for m in vals for d in range(2, abs(m) + 1) if m % d == 0 for p in range(1, d)}
    return sorted(out)


@lru_cache(maxsize=None)
def _level_reach(nu: Weight, a: Fraction, quantum: bool) -> dict[Permutation, frozenset[Permutation]]:
    n = len(nu) - 1
    g = qbg.QuantumBruhatGraph.build(n, stabilizer(nu))
    if not quantum:
        g = g.bruhat_only()
    sub = g.subgraph_at_level(a, nu)
    return {x: frozenset(sub.reachable(x)) for x in sub.vertices}


def enumerate_paths(nu: Sequence[int], quantum: bool = True) -> list[QLSPath]:
    """All QLS (or LS when quantum=False) paths of shape nu, by exhaustive search."""
    nu = weyl.canonical(nu)
    if not weyl.is_dominant(nu):
        raise weyl.ConventionError(f"{nu} is not dominant")
    n = len(nu) - 1
    J = stabilizer(nu)
    verts = weyl.min_reps(n, J)
    crit = _critical_times(nu)
    out: list[QLSPath] = []

    def extend(elems, times):
        out.append(QLSPath(tuple(elems), tuple(times) + (Fraction(1),)))
        for a in crit:
            if a <= times[-1]:
                continue
            reach = _level_reach(nu, a, quantum)
            for y in verts:
                if y != elems[-1] and elems[-1] in reach[y]:
                    extend(elems + [y], times + [a])

    for w in verts:
        extend([w], [Fraction(0)])
    return sorted(out, key=lambda p: (len(p.elems), [tuple(w) for w in p.elems], p.times))


def enumerate_qls(nu: Sequence[int]) -> list[QLSPath]:
    return enumerate_paths(nu, quantum=True)


def enumerate_ls(nu: Sequence[int]) -> list[QLSPath]:
    return enumerate_paths(nu, quantum=False)


# ---------------------------------------------------------------- statistics


def path_wt(eta: QLSPath, nu: Sequence[int]) -> Weight:
    acc = [Fraction(0)] * len(nu)
    for w, a0, a1 in zip(eta.elems, eta.times, eta.times[1:]):
        for k, x in enumerate(weyl.act(w, nu)):
            acc[k] += (a1 - a0) * x
    if any(x.denominator != 1 for x in acc):
        raise weyl.ConventionError(f"non-integral weight for {eta}")
    return weyl.canonical([int(x) for x in acc])


def path_deg(eta: QLSPath, nu: Sequence[int]) -> Fraction:
    n = len(nu) - 1
    total = Fraction(0)
    for l in range(1, len(eta.elems)):
        xi = qbg.path_weight(n, eta.elems[l], eta.elems[l - 1])
        total -= eta.times[l] * weyl.pair_coroot(nu, xi)
    return total


def path_stats(eta: QLSPath, nu: Sequence[int]) -> dict:
    return {"final": eta.final, "wt": path_wt(eta, nu), "deg": path_deg(eta, nu)}


@dataclass(frozen=True)
class DirectionData:
    direction: Permutation
    chain: tuple[Permutation, ...]
    coroot: Coroot
    deg: Fraction


def kappa_v(eta: QLSPath, v: Permutation, nu: Sequence[int]) -> DirectionData:
    """Final direction relative to v and the coroot zeta(eta, v)."""
    n = len(v) - 1
    J = stabilizer(nu)
    hat = [v]
    for w in eta.elems:
        hat.append(qbg.tb_max(w, J, hat[-1]))
    zeta = weyl.zero_coroot(n)
    for l in range(len(eta.elems)):
        zeta = weyl.coroot_add(zeta, qbg.path_weight(n, hat[l + 1], hat[l]))
    return DirectionData(hat[-1], tuple(hat), zeta, Fraction(0))


def iota_v(eta: QLSPath, v: Permutation, nu: Sequence[int]) -> DirectionData:
    """Initial direction relative to v, the coroot xi(eta, v) and deg_v(eta)."""
    n = len(v) - 1
    J = stabilizer(nu)
    s = len(eta.elems)
    tilde: list[Permutation] = [v] * (s + 2)
    for l in range(s, 0, -1):
        tilde[l] = qbg.tb_min(eta.elems[l - 1], J, tilde[l + 1])
    xi = weyl.zero_coroot(n)
    deg = Fraction(0)
    for l in range(1, s + 1):
        step = qbg.path_weight(n, tilde[l + 1], tilde[l])
        xi = weyl.coroot_add(xi, step)
        deg -= eta.times[l] * weyl.pair_coroot(nu, step)
    return DirectionData(tilde[1], tuple(tilde[1:]), xi, deg)


# ---------------------------------------------------------------- DP condition


def dp_set(n: int, K: Iterable[int]) -> set[Permutation]:
    """v whose Bruhat label-increasing path from e avoids the Levi of J = I minus K."""
    K = frozenset(K)
    J = weyl.complement(n, K)
    order = weyl.three_block_order(n, K)
    g = qbg.full_graph(n).bruhat_only()
    e0 = weyl.identity(n + 1)
    out = set()
    for v in weyl.all_permutations(n + 1):
        path = qbg.unique_label_increasing_path(g, order, e0, v)
        if all(not weyl.is_in_levi(ed.label, J) for ed in path):
            out.add(v)
    return out


def qdp_set(n: int, K: Iterable[int]) -> set[Permutation]:
    """Same with the quantum Bruhat graph and a Levi-first order."""
    K = frozenset(K)
    J = weyl.complement(n, K)
    order = weyl.levi_first_order(n, J)
    g = qbg.full_graph(n)
    e0 = weyl.identity(n + 1)
    out = set()
    for v in weyl.all_permutations(n + 1):
        path = qbg.unique_label_increasing_path(g, order, e0, v)
        if all(not weyl.is_in_levi(ed.label, J) for ed in path):
            out.add(v)
    return out


def check_dp_set(n: int, K: Iterable[int]) -> bool:
    K = frozenset(K)
    return dp_set(n, K) == set(weyl.parabolic_subgroup(n, K))


def sum_of_fundamentals(n: int, K: Iterable[int]) -> Weight:
    out = weyl.zero_weight(n + 1)
    for i in K:
        out = weyl.weight_add(out, fundamental(i, n))
    return out


# ---------------------------------------------------------------- expansions


def line_bundle_via_qls(n: int, K: Iterable[int]) -> ShiftModuleElem:
    """[O(w0 mu)] from the QLS sum over kappa(eta, v) = e (before simplification)."""
    K = frozenset(K)
    mu = sum_of_fundamentals(n, K)
    e0 = weyl.identity(n + 1)
    out = ShiftModuleElem.zero(n)
    for eta in enumerate_qls(mu):
        for v in weyl.all_permutations(n + 1):
            d = kappa_v(eta, v, mu)
            if d.direction == e0:
                c = e(weyl.weight_neg(path_wt(eta, mu))) * (-1) ** v.length()
                out = out + ShiftModuleElem.schubert(v, d.coroot, None, c)
    return out


def expand_antidominant(n: int, K: Iterable[int]) -> ShiftModuleElem:
    """sum over v in W_K of (-1)^l(v) e^{-mu} [O(v)]."""
    K = frozenset(K)
    mu = sum_of_fundamentals(n, K)
    out = ShiftModuleElem.zero(n)
    for v in weyl.parabolic_subgroup(n, K):
        out = out + ShiftModuleElem.schubert(v, None, None, e(weyl.weight_neg(mu)) * (-1) ** v.length())
    return out


def _translation(m: int, n: int, k: int) -> Coroot:
    return weyl.coroot_scale(k, weyl.simple_root(m).coroot(n))


def expand_mixed_equivariant(n: int, K: Iterable[int], m: int, cap: int) -> tuple[ShiftModuleElem, list]:
    """The QLS(varpi_m) form, computing initial directions by the tilted recursion.

    Also returns the raw signed term list before collection.
    """
    K = frozenset(K)
    if m in K:
        raise weyl.ConventionError("m must lie outside K")
    mu = sum_of_fundamentals(n, K)
    vm = fundamental(m, n)
    out = ShiftModuleElem.zero(n)
    raw = []
    for k in range(cap + 1):
        for v in weyl.parabolic_subgroup(n, K):
            base = e(weyl.weight_neg(mu)) * (-1) ** v.length()
            for eta in enumerate_qls(vm):
                d = iota_v(eta, v, vm)
                if any(d.coroot) or d.deg != 0:
                    raise qbg.PathError(f"nonzero xi or deg_v for {eta}, {v}")
                xi = weyl.coroot_add(d.coroot, _translation(m, n, k))
                c = base * e(path_wt(eta, vm))
                raw.append(((-1) ** v.length(), (d.direction, xi, path_wt(eta, vm))))
                out = out + ShiftModuleElem.schubert(d.direction, xi, None, c)
    return out, raw


def mixed_index_set(n: int, K: Iterable[int], m: int) -> list[Permutation]:
    K = frozenset(K)
    Wm = weyl.min_reps(n, frozenset(range(1, n + 1)) - {m})
    levi = set(weyl.parabolic_subgroup(n, weyl.complement(n, K)))
    return [w for w in Wm if w in levi]


def expand_mixed(n: int, K: Iterable[int], m: int, cap: int) -> ShiftModuleElem:
    """Cancellation-free form indexed by W^{I-m} intersect W_{I-K}, with [wv t_{k alpha_m}]."""
    K = frozenset(K)
    mu = sum_of_fundamentals(n, K)
    vm = fundamental(m, n)
    out = ShiftModuleElem.zero(n)
    for k in range(cap + 1):
        for v in weyl.parabolic_subgroup(n, K):
            for w in mixed_index_set(n, K, m):
                c = e(weyl.weight_neg(mu)) * e(weyl.act(w, vm)) * (-1) ** v.length()
                out = out + ShiftModuleElem.schubert(w * v, _translation(m, n, k), None, c)
    return out


def mixed_is_injective(n: int, K: Iterable[int], m: int) -> bool:
    K = frozenset(K)
    prods = [w * v for v in weyl.parabolic_subgroup(n, K) for w in mixed_index_set(n, K, m)]
    return len(prods) == len(set(prods))


def check_up_is_product(n: int, K: Iterable[int], m: int) -> bool:
    """up(v, w, I-m) = wv on the cancellation-free index set."""
    K = frozenset(K)
    Jm = frozenset(range(1, n + 1)) - {m}
    return all(qbg.up(v, w, Jm) == w * v
               for v in weyl.parabolic_subgroup(n, K) for w in mixed_index_set(n, K, m))
