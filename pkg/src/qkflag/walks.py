"""
Quantum walks along the root sequence attached to a minuscule weight, their
decorations, signs and weights, and the resulting inverse Chevalley
expansions for e^{varpi_1} times a Schubert class.

>>> [r.label() for r in varpi1_sequence(3)]
['a_{1,3}', 'a_{1,2}', 'a_{1,1}']
>>> len(enumerate_walks(3, prefix_element(3, 1), varpi1_sequence(3)))
3
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from . import qbg, weyl
from .kclasses import ShiftModuleElem, signed_terms
from .laurent import GroupAlgElem, e
from .weyl import Coroot, Permutation, Root, Weight


def prefix_element(n: int, k: int) -> Permutation:
    """s_1 s_2 ... s_k in S_{n+1}."""
    return weyl.from_word(range(1, k + 1), n + 1)


def eta_sequence(n: int, i: int, x: Permutation, x_word: Sequence[int] | None = None,
                 y_word: Sequence[int] | None = None) -> tuple[Root, ...]:
    """(beta_l, ..., beta_1, gamma_1, ..., gamma_m) for lambda = x varpi_i."""
    N = n + 1
    J = frozenset(range(1, n + 1)) - {i}
    if not weyl.in_min_reps(x, J):
        raise weyl.ConventionError(f"{x} is not a minimal coset representative")
    top = weyl.min_coset_rep(weyl.longest(N), J)
    y = top * x.inverse()
    if y.length() + x.length() != top.length():
        raise weyl.ConventionError("lengths of x and y do not add up")
    xw = tuple(x_word) if x_word is not None else weyl.reduced_word(x)
    yw = tuple(y_word) if y_word is not None else weyl.reduced_word(y)
    if weyl.from_word(xw, N) != x or len(xw) != x.length():
        raise weyl.ConventionError("x_word is not a reduced word of x")
    if weyl.from_word(yw, N) != y or len(yw) != y.length():
        raise weyl.ConventionError("y_word is not a reduced word of y")
    # xw = (j_l, ..., j_1); beta_r = s_{j_l} ... s_{j_{r+1}} alpha_{j_r}
    l = len(xw)
    betas = {}
    for r in range(1, l + 1):
        pre = weyl.from_word(xw[: l - r], N)
        betas[r] = weyl.act_root(pre, weyl.simple_root(xw[l - r]))
    # yw = (i_1, ..., i_m); gamma_r = s_{i_m} ... s_{i_{r+1}} alpha_{i_r}
    m = len(yw)
    gammas = []
    for r in range(1, m + 1):
        pre = weyl.from_word(tuple(reversed(yw[r:])), N)
        gammas.append(weyl.act_root(pre, weyl.simple_root(yw[r - 1])))
    return tuple(betas[r] for r in range(l, 0, -1)) + tuple(gammas)


def varpi1_sequence(n: int) -> tuple[Root, ...]:
    return eta_sequence(n, 1, weyl.identity(n + 1), (), tuple(range(n, 0, -1)))


def enumerate_walks(n: int, w: Permutation, etas: Sequence[Root]) -> list[tuple[Permutation, ...]]:
    g = qbg.full_graph(n)
    N = n + 1
    out = []

    def step(seq):
        r = len(seq)
        if r == len(etas) + 1:
            out.append(tuple(seq))
            return
        cur = seq[-1]
        step(seq + [cur])
        nxt = etas[r - 1].reflection(N) * cur
        if g.has_edge(cur, nxt):
            step(seq + [nxt])

    step([w])
    return out


@dataclass(frozen=True)
class DecoratedWalk:
    walk: tuple[Permutation, ...]
    decoration: tuple[tuple[int, int], ...]
    sign: int
    wt: Weight
    wt_coroot: Coroot


def _special_steps(walk, etas, l: int) -> tuple[list[int], list[int]]:
    minus, plus = [], []
    for r in range(1, len(walk)):
        if walk[r] != walk[r - 1]:
            continue
        root = weyl.act_root(walk[r - 1].inverse(), etas[r - 1])
        if r <= l and root.is_simple():
            minus.append(r)
        if r > l and (-root).is_simple():
            plus.append(r)
    return minus, plus


def decorate(n: int, walk: tuple[Permutation, ...], etas: Sequence[Root], l: int) -> list[DecoratedWalk]:
    N = n + 1
    w0 = weyl.longest(N)
    minus, plus = _special_steps(walk, etas, l)
    special = minus + plus
    out = []
    for bits in product((0, 1), repeat=len(special)):
        b = dict(zip(special, bits))
        sign = 1
        wt = weyl.zero_weight(N)
        wtv = weyl.zero_coroot(n)
        for r in range(1, len(walk)):
            prev, cur = walk[r - 1], walk[r]
            down = cur.length() < prev.length()
            upward = cur.length() > prev.length()
            if (r <= l and down) or (r > l and upward):
                sign = -sign
            root = weyl.act_root(w0 * prev.inverse(), etas[r - 1])
            coeff = 0
            if r in b:
                coeff = -b[r] if r <= l else b[r]
            elif down:
                coeff = 1
            if coeff:
                wt = weyl.weight_add(wt, weyl.weight_scale(coeff, root.weight(N)))
                wtv = weyl.coroot_add(wtv, weyl.coroot_scale(coeff, root.coroot(n)))
        sign *= (-1) ** sum(bits)
        out.append(DecoratedWalk(walk, tuple(sorted(b.items())), sign, wt, wtv))
    return out


def decorated_walks(n: int, w: Permutation, i: int = 1, x: Permutation | None = None,
                    etas: Sequence[Root] | None = None) -> list[DecoratedWalk]:
    x = weyl.identity(n + 1) if x is None else x
    if etas is None:
        etas = varpi1_sequence(n) if (i == 1 and x.is_identity()) else eta_sequence(n, i, x)
    l = x.length()
    out = []
    for walk in enumerate_walks(n, w, etas):
        out.extend(decorate(n, walk, etas, l))
    return out


def inverse_chevalley_terms(n: int, w: Permutation, i: int = 1,
                            x: Permutation | None = None) -> list[tuple[int, tuple]]:
    """Signed terms (sign, (w_end, translation, twist)) of e^{x varpi_i} [O(w)]."""
    N = n + 1
    x = weyl.identity(N) if x is None else x
    lam = weyl.act(x, weyl.fundamental(i, n))
    w0 = weyl.longest(N)
    l = x.length()
    terms = []
    for dw in decorated_walks(n, w, i, x):
        wl = dw.walk[l]
        xi = weyl.coroot_neg(weyl.act_coroot(w0, dw.wt_coroot))
        twist = weyl.weight_add(weyl.weight_neg(weyl.act(w0 * wl.inverse(), lam)), dw.wt)
        terms.append((dw.sign, (dw.walk[-1], xi, twist)))
    return terms


def terms_to_elem(n: int, terms) -> ShiftModuleElem:
    out = ShiftModuleElem.zero(n)
    for s, (w, xi, nu) in terms:
        out = out + ShiftModuleElem.schubert(w, xi, nu, s)
    return out


# ---------------------------------------------------------------- varpi_1, w = s_1...s_k


def expected_walk_forms(n: int, k: int) -> dict[str, list[tuple[Permutation, ...]]]:
    """The three shapes of walks from s_1...s_k, written out directly."""
    w = prefix_element(n, k)
    out: dict[str, list] = {"constant": [(w,) * (n + 1)], "bruhat": [], "quantum": []}
    if k < n:
        ws = w.right_simple(k + 1)
        out["bruhat"].append((w,) * (n - k) + (ws,) * (k + 1))
    for m in range(1, k + 1):
        seq = [w] * (n - k + 1)
        cur = w
        for t in range(k, m - 1, -1):
            cur = cur.right_simple(t)
            seq.append(cur)
        seq += [cur] * (n + 1 - len(seq))
        out["quantum"].append(tuple(seq))
    return out


def walk_edge_labels(n: int, walk: Sequence[Permutation]) -> list[tuple[int, Root, bool]]:
    g = qbg.full_graph(n)
    out = []
    for r in range(1, len(walk)):
        if walk[r] != walk[r - 1]:
            ed = g.has_edge(walk[r - 1], walk[r])
            out.append((r, ed.label, ed.quantum))
    return out


def check_walk_forms(n: int, k: int) -> bool:
    w = prefix_element(n, k)
    found = set(enumerate_walks(n, w, varpi1_sequence(n)))
    forms = expected_walk_forms(n, k)
    if found != {s for v in forms.values() for s in v}:
        return False
    for seq in forms["bruhat"]:
        labels = walk_edge_labels(n, seq)
        if labels != [(n - k, weyl.simple_root(k + 1), False)]:
            return False
    for idx, seq in enumerate(forms["quantum"]):
        m = idx + 1
        labels = walk_edge_labels(n, seq)
        want = [(n - k + 1 + t, weyl.simple_root(k - t), True) for t in range(k - m + 1)]
        if labels != want:
            return False
    return True


def _alpha(n: int, i: int, j: int) -> Root:
    return Root(i, j)


def displayed_inverse_chevalley_terms(n: int, k: int) -> list[tuple[int, tuple]]:
    """The five-line expansion of e^{varpi_1}[s_1...s_k], transcribed term by term."""
    N = n + 1
    w0 = weyl.longest(N)
    w = prefix_element(n, k)
    base = weyl.weight_neg(weyl.act(w0 * w.inverse(), weyl.fundamental(1, n)))
    zero = weyl.zero_coroot(n)

    def tw(root: Root) -> Weight:
        return weyl.weight_add(base, weyl.weight_neg(weyl.act(w0, root.weight(N))))

    terms = [(1, (w, zero, base))]
    if k >= 1:
        terms.append((-1, (w, _alpha(n, k, k).coroot(n), tw(_alpha(n, k, k)))))
    if k < n:
        terms.append((-1, (w.right_simple(k + 1), zero, base)))
    for m in range(1, k + 1):
        r = _alpha(n, m, k)
        terms.append((1, (prefix_element(n, m - 1), r.coroot(n), tw(r))))
    for m in range(2, k + 1):
        r = _alpha(n, m - 1, k)
        terms.append((-1, (prefix_element(n, m - 1), r.coroot(n), tw(r))))
    return terms


def assemble_inv_chevalley(n: int, k: int) -> dict:
    walk_terms = inverse_chevalley_terms(n, prefix_element(n, k))
    shown = displayed_inverse_chevalley_terms(n, k)
    return {
        "walk_terms": signed_terms(walk_terms),
        "displayed_terms": signed_terms(shown),
        "equal": signed_terms(walk_terms) == signed_terms(shown),
        "lhs": ShiftModuleElem.schubert(prefix_element(n, k), coeff=e(weyl.fundamental(1, n))),
        "rhs": terms_to_elem(n, walk_terms),
    }


def next_prefix_class(n: int, k: int) -> ShiftModuleElem:
    """Expression for [O(s_1...s_{k+1})] (zero when k = n) derived from the walk expansion.

    Twisting the walk identity by w0 s_k...s_1 varpi_1 and isolating the
    unique term supported on s_1...s_{k+1}.
    """
    N = n + 1
    w0 = weyl.longest(N)
    w = prefix_element(n, k)
    shift = weyl.act(w0 * w.inverse(), weyl.fundamental(1, n))
    rhs = terms_to_elem(n, inverse_chevalley_terms(n, w)).twist(shift)
    lhs = ShiftModuleElem.schubert(w, None, shift, e(weyl.fundamental(1, n)))
    rest = rhs - lhs
    if k < n:
        target = (w.right_simple(k + 1), weyl.zero_coroot(n), weyl.zero_weight(N))
        c = rest.terms.get(target)
        if c is None or c != GroupAlgElem.constant(-1, N):
            raise weyl.ConventionError("walk expansion lacks the expected Bruhat term")
        rest = rest + ShiftModuleElem(n, {target: 1})
    return rest


def displayed_next_prefix_class(n: int, k: int) -> ShiftModuleElem:
    N = n + 1
    w0 = weyl.longest(N)
    w = prefix_element(n, k)
    ek = weyl.act(w0, weyl.epsilon(k + 1, N))
    out = ShiftModuleElem.schubert(w, None, ek, -e(weyl.fundamental(1, n)))
    out = out + ShiftModuleElem.schubert(w)
    for m in range(1, k + 1):
        tw = weyl.weight_add(ek, weyl.weight_neg(weyl.act(w0, weyl.epsilon(m, N))))
        xi = Root(m, k).coroot(n)
        out = out + ShiftModuleElem.schubert(prefix_element(n, m - 1), xi, tw)
        out = out - ShiftModuleElem.schubert(prefix_element(n, m), xi, tw)
    return out
