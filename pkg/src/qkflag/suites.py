"""
Named verification suites shared by the command line and the acceptance tests.

Each suite returns a SuiteReport: a list of named checks, each with a pass
flag and an optional counterexample, plus timing and a check count.

>>> r = run_suite("telescoping", n=2)
>>> r.ok, r.count
(True, 3)
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable

from . import groth, laurent, qbg, qkring, qls, shiftcalc, walks, weyl


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list[tuple[str, bool, Any]] = field(default_factory=list)
    seconds: float = 0.0

    def add(self, label: str, ok: bool, counterexample: Any = None) -> None:
        self.checks.append((label, bool(ok), None if ok else counterexample))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def count(self) -> int:
        return len(self.checks)

    def failures(self) -> list[tuple[str, Any]]:
        return [(label, cex) for label, ok, cex in self.checks if not ok]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "status": "pass" if self.ok else "fail",
            "checks": self.count,
            "failures": [{"check": lab, "counterexample": _jsonable(c)} for lab, c in self.failures()],
            "seconds": round(self.seconds, 3),
        }

    def to_text(self) -> str:
        head = f"{self.suite} {self.params}: {'PASS' if self.ok else 'FAIL'} ({self.count} checks, {self.seconds:.2f}s)"
        lines = [head] + [f"  FAIL {lab}: {_jsonable(c)}" for lab, c in self.failures()]
        return "\n".join(lines)


def _jsonable(x: Any) -> Any:
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return str(x)


def threads() -> int:
    """Worker cap from FLAGK_THREADS (default 1: run sequentially)."""
    try:
        return max(1, int(os.environ.get("FLAGK_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn: Callable, items: list) -> list:
    """Map a picklable top-level function, in worker processes when allowed."""
    k = min(threads(), len(items))
    if k <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=k) as ex:
        return list(ex.map(fn, items))


def subsets(n: int):
    for r in range(n + 1):
        yield from (frozenset(c) for c in combinations(range(1, n + 1), r))


# ---------------------------------------------------------------- weyl / poly


def suite_weyl(n: int, **_) -> SuiteReport:
    rep = SuiteReport("weyl", {"n": n})
    N = n + 1
    w0 = weyl.longest(N)
    rep.add("longest_length", w0.length() == n * N // 2)
    for w in weyl.all_permutations(N):
        rep.add(f"reduced_word {tuple(w)}", weyl.from_word(weyl.reduced_word(w), N) == w
                and len(weyl.reduced_word(w)) == w.length())
    for J in subsets(n):
        rep.add(f"levi_first_convex J={sorted(J)}", weyl.is_convex_order(weyl.levi_first_order(n, J), n))
        rep.add(f"three_block_convex K={sorted(J)}", weyl.is_convex_order(weyl.three_block_order(n, J), n))
        reps = weyl.min_reps(n, J)
        rep.add(f"coset_count J={sorted(J)}",
                len(reps) * len(weyl.parabolic_subgroup(n, J)) == len(weyl.all_permutations(N)))
    return rep


def suite_poly(n: int, **_) -> SuiteReport:
    rep = SuiteReport("poly", {"n": n})
    N = n + 1
    rng = random.Random(n)
    for _ in range(40):
        nu = tuple(rng.randint(-3, 3) for _ in range(N))
        f = laurent.e(nu)
        for i in range(1, N):
            d = laurent.demazure(i, f)
            rep.add(f"closed_form i={i} nu={nu}", d == laurent.demazure_by_division(i, f))
            rep.add(f"idempotent i={i} nu={nu}", laurent.demazure(i, d) == d)
    for i in range(1, N):
        for _ in range(10):
            nu = tuple(rng.randint(-2, 2) for _ in range(N))
            mu = tuple(rng.randint(-2, 2) for _ in range(N))
            lhs = laurent.demazure(i, laurent.e(weyl.weight_add(nu, mu)))
            rep.add(f"leibniz i={i}", lhs == laurent.leibniz_rhs(i, nu, mu))
    return rep


# ---------------------------------------------------------------- qbg


def orders_for(n: int, want: int = 3) -> list[tuple]:
    """Up to `want` distinct reflection orders, always including a Levi-first one when n >= 2."""
    out = []
    if n >= 2:
        out.append(weyl.levi_first_order(n, {1}))
    for wd in weyl.all_reduced_words(weyl.longest(n + 1)):
        if len(out) >= want:
            break
        o = weyl.reflection_order(wd, n)
        if o not in out:
            out.append(o)
    return out


def count_reflection_orders(n: int) -> int:
    return len({weyl.reflection_order(wd, n) for wd in weyl.all_reduced_words(weyl.longest(n + 1))})


def _li_for_source(args) -> list[tuple[str, bool, Any]]:
    n, v, orders = args
    g = qbg.full_graph(n)
    bg = g.bruhat_only()
    out = []
    for w in weyl.all_permutations(n + 1):
        d = qbg.distance(n, v, w)
        spw = qbg.shortest_path_weights(n, v, w)
        for k, order in enumerate(orders):
            paths = qbg.label_increasing_paths(g, order, v, w)
            ok = len(paths) == 1 and len(paths[0]) == d and {qbg.path_total_weight(paths[0], n)} == spw
            out.append((f"QBG {tuple(v)}->{tuple(w)} order{k}", ok, {"paths": len(paths), "dist": d}))
            bpaths = qbg.label_increasing_paths(bg, order, v, w)
            want = 1 if weyl.bruhat_leq(v, w) else 0
            out.append((f"BG {tuple(v)}->{tuple(w)} order{k}", len(bpaths) == want, {"paths": len(bpaths)}))
        if weyl.bruhat_leq(v, w):
            path = qbg.label_increasing_paths(g, orders[0], v, w)
            ok = len(path) == 1 and not any(ed.quantum for ed in path[0]) and d == w.length() - v.length()
            out.append((f"BG-QBG {tuple(v)}->{tuple(w)}", ok, None))
    return out


def suite_qbg_li(n: int, samples: int = 200, seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("qbg-li", {"n": n})
    orders = orders_for(n)
    rep.add("orders_available", len(orders) >= min(3, count_reflection_orders(n)), {"orders": len(orders)})
    rep.add("orders_convex", all(weyl.is_convex_order(o, n) for o in orders))
    if n <= 3:
        for chunk in pmap(_li_for_source, [(n, v, orders) for v in weyl.all_permutations(n + 1)]):
            for c in chunk:
                rep.add(*c)
    else:
        rng = random.Random(seed)
        perms = weyl.all_permutations(n + 1)
        g = qbg.full_graph(n)
        for _ in range(samples):
            v, w = rng.choice(perms), rng.choice(perms)
            d = qbg.distance(n, v, w)
            for k, order in enumerate(orders[:3]):
                paths = qbg.label_increasing_paths(g, order, v, w)
                rep.add(f"QBG {tuple(v)}->{tuple(w)} order{k}", len(paths) == 1 and len(paths[0]) == d)
    return rep


def suite_tilted_bounds(n: int, **_) -> SuiteReport:
    rep = SuiteReport("tilted-bounds", {"n": n})
    perms = weyl.all_permutations(n + 1)
    for J in subsets(n):
        for x in weyl.min_reps(n, J):
            for w in perms:
                fw = weyl.min_coset_rep(w, J)
                if weyl.bruhat_leq(fw, x):
                    a, b = qbg.tb_min(x, J, w), qbg.up(w, x, J)
                    rep.add(f"tb_min=up J={sorted(J)} x={tuple(x)} w={tuple(w)}", a == b, {"tb_min": a, "up": b})
                if weyl.bruhat_leq(x, fw):
                    a, b = qbg.tb_max(x, J, w), qbg.dn(w, x, J)
                    rep.add(f"tb_max=dn J={sorted(J)} x={tuple(x)} w={tuple(w)}",
                            a == b and weyl.bruhat_leq(a, w), {"tb_max": a, "dn": b})
                    rep.add(f"tb_max_labels J={sorted(J)} x={tuple(x)} w={tuple(w)}",
                            qbg.tb_max_by_labels(x, J, w) == a)
    return rep


# ---------------------------------------------------------------- qls


def suite_qls(n: int, tcap: int = 2, **_) -> SuiteReport:
    rep = SuiteReport("qls", {"n": n, "tcap": tcap})
    for i in range(1, n + 1):
        nu = weyl.fundamental(i, n)
        q, l = qls.enumerate_qls(nu), qls.enumerate_ls(nu)
        rep.add(f"QLS=LS i={i}", set(q) == set(l) and len(q) == len(weyl.min_reps(n, qls.stabilizer(nu))))
    full = frozenset(range(1, n + 1))
    for K in subsets(n):
        rep.add(f"DP K={sorted(K)}", qls.check_dp_set(n, K))
        rep.add(f"QDP K={sorted(K)}", qls.qdp_set(n, K) == set(weyl.parabolic_subgroup(n, K)))
        rep.add(f"antidominant K={sorted(K)}", qls.line_bundle_via_qls(n, K) == qls.expand_antidominant(n, K))
        for m in sorted(full - K):
            eq, _ = qls.expand_mixed_equivariant(n, K, m, tcap)
            z2 = qls.expand_mixed(n, K, m, tcap)
            rep.add(f"equivariant=z2 K={sorted(K)} m={m}", eq == z2, {"diff": str(eq - z2)})
            rep.add(f"injective K={sorted(K)} m={m}", qls.mixed_is_injective(n, K, m))
            rep.add(f"up=wv K={sorted(K)} m={m}", qls.check_up_is_product(n, K, m))
    return rep


# ---------------------------------------------------------------- walks


def suite_walks(n: int, **_) -> SuiteReport:
    rep = SuiteReport("walks", {"n": n})
    seq = walks.varpi1_sequence(n)
    for k in range(n + 1):
        w = walks.prefix_element(n, k)
        forms = walks.expected_walk_forms(n, k)
        found = walks.enumerate_walks(n, w, seq)
        flat = [s for v in forms.values() for s in v]
        rep.add(f"walk-forms forms k={k}", walks.check_walk_forms(n, k))
        rep.add(f"walk-forms exactly-one k={k}", len(flat) == len(set(flat)) == len(found))
        rep.add(f"walk-forms count k={k}", len(found) == 1 + (k < n) + k, {"walks": len(found)})
        if k == n:
            rep.add(f"walk-forms no form (2) k={k}", not forms["bruhat"])
        if k == 0:
            rep.add(f"walk-forms no form (3) k={k}", not forms["quantum"])
        asm = walks.assemble_inv_chevalley(n, k)
        rep.add(f"inverse-chevalley k={k}", asm["equal"], {"walk": asm["walk_terms"], "shown": asm["displayed_terms"]})
        rep.add(f"next-prefix k={k}", walks.next_prefix_class(n, k) == walks.displayed_next_prefix_class(n, k))
    return rep


# ---------------------------------------------------------------- shiftcalc


def _reports_into(rep: SuiteReport, reports) -> None:
    for r in reports:
        rep.add(f"{r.identity} level={r.level}", r.ok, r.counterexample)


def suite_ffn1(n: int, tcap: int | None = None, **_) -> SuiteReport:
    rep = SuiteReport("ffn1", {"n": n, "tcap": tcap})
    _reports_into(rep, shiftcalc.verify_all(n, tcap))
    return rep


def suite_telescoping(n: int, **_) -> SuiteReport:
    """Telescoping identity for every k <= n (all j_p)."""
    rep = SuiteReport("telescoping", {"kmax": n})
    for k in range(1, n + 1):
        for jp in range(k):
            _reports_into(rep, [shiftcalc.verify_telescoping(k, jp)])
    return rep


def suite_eh(n: int, **_) -> SuiteReport:
    rep = SuiteReport("eh-recurrence", {"n": n})
    _reports_into(rep, [shiftcalc.verify_EH_recurrence(n), shiftcalc.verify_triangular_solution(n)])
    return rep


# ---------------------------------------------------------------- qkring


def _ring_report(rep: SuiteReport, r: qkring.CheckReport) -> None:
    for name, ok in r.checks.items():
        rep.add(f"{r.name}{r.params} {name}", ok, r.counterexample)


def suite_freeness(n: int, cap: int = 3, mode: str | None = None, seed: int = 0, seeds=None, **_) -> SuiteReport:
    mode = mode or ("exact" if n <= 2 else "modp")
    rep = SuiteReport("freeness", {"n": n, "cap": cap, "mode": mode,
                                   "prime": laurent.PRIME if mode == "modp" else None})
    for s in (seeds if seeds is not None else ([seed] if mode == "exact" else [seed, seed + 1, seed + 2])):
        _ring_report(rep, qkring.verify_freeness(n, cap, mode, s))
    return rep


def suite_rel(n: int, cap: int = 4, **_) -> SuiteReport:
    rep = SuiteReport("rel", {"n": n, "cap": cap})
    _ring_report(rep, qkring.verify_relation_reduction(n, cap))
    return rep


def suite_line_bundle(n: int, mode: str = "exact", seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("ls0", {"n": n})
    rep.add("gate n=1 K={1}", qkring.verify_line_bundle_representative(1, [1]).ok)
    for K in subsets(n):
        _ring_report(rep, qkring.verify_line_bundle_representative(n, K, mode, seed))
    return rep


# ---------------------------------------------------------------- groth


def suite_groth(n: int, cap: int = 2, mode: str | None = None, seed: int = 0, **_) -> SuiteReport:
    mode = mode or ("exact" if n <= 2 else "modp")
    rep = SuiteReport("groth", {"n": n, "cap": cap, "mode": mode})
    rep.add("gate pi_1 G_s1 = 1", groth.gate())
    m = max(4, n + 1)
    rep.add(f"dominant closed form S_{m}", groth.dominant_agreement(m))
    rep.add(f"word independence S_{m}", all(groth.word_independent(w) for w in weyl.all_permutations(m)))
    rep.add("Ehat at Q=0 is e_p (k<=5)", groth.ehat_limit(5))
    for k in range(1, n + 1):
        _ring_report(rep, groth.verify_hat_basis(k))
    _ring_report(rep, groth.verify_grothendieck_membership(n, mode, seed, cap))
    rep.add(f"stability n={n}", groth.verify_stability(n, n + 2))
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "weyl": suite_weyl,
    "poly": suite_poly,
    "qbg-li": suite_qbg_li,
    "tilted-bounds": suite_tilted_bounds,
    "qls": suite_qls,
    "walks": suite_walks,
    "telescoping": suite_telescoping,
    "ffn1": suite_ffn1,
    "eh-recurrence": suite_eh,
    "rel": suite_rel,
    "freeness": suite_freeness,
    "ls0": suite_line_bundle,
    "groth": suite_groth,
}

# dependency order for --all: weyl, poly, qbg, qls/walks, shiftcalc, qkring, groth
ALL_ORDER = ["weyl", "poly", "qbg-li", "tilted-bounds", "qls", "walks", "telescoping", "ffn1", "eh-recurrence",
             "rel", "freeness", "ls0", "groth"]


def run_suite(name: str, **params) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    t = time.perf_counter()
    rep = SUITES[name](**params)
    rep.seconds = time.perf_counter() - t
    return rep
