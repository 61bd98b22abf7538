"""
Double Grothendieck polynomials, isobaric divided differences, and the
quantization map in the x-variables.

Coefficients are Laurent polynomials: y_j stands for 1 - e^{-eps_j}.  For
w in S_m the torus lattice has rank m, so e^{eps_1}, ..., e^{eps_{m-1}} are
algebraically independent.

>>> g = grothendieck(weyl.Permutation((2, 1)))
>>> pi(1, g) == g.ring.const(g.ring.one)
True
>>> code(weyl.Permutation((3, 1, 2)))
(2, 0, 0)
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from . import laurent, weyl
from .laurent import GroupAlgElem
from .qkring import CheckReport, PolyRing, QPoly, one_minus_x, torus_ideal
from .weyl import Permutation


class DivisionError(weyl.ConventionError):
    """A divided difference did not divide exactly."""


# ---------------------------------------------------------------- basics


def y(j: int, lattice: int) -> GroupAlgElem:
    """1 - e^{-eps_j}."""
    return 1 - laurent.e(weyl.weight_neg(weyl.epsilon(j, lattice)))


def xy_ring(nx: int, lattice: int | None = None, nq: int = 0) -> PolyRing:
    return PolyRing(nx, nq, GroupAlgElem.one(lattice or nx))


def code(w: Permutation) -> tuple[int, ...]:
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n + 1) if w(j) < w(i)) for i in range(1, n + 1))


def is_dominant_perm(w: Permutation) -> bool:
    c = code(w)
    return all(a >= b for a, b in zip(c, c[1:]))


def eta(j: int, i: int, ring: PolyRing) -> QPoly:
    """prod_{k <= j} (x_i + y_k - x_i y_k)."""
    out = ring.const(ring.one)
    for k in range(1, j + 1):
        out = out * (ring.const(ring.one) - one_minus_x(ring, i) * (1 - y(k, ring.one.N)))
    return out


# ---------------------------------------------------------------- operators


def divided_difference(i: int, f: QPoly) -> QPoly:
    """(f - s_i f) / (x_i - x_{i+1}), with the quotient checked by multiplying back."""
    ring = f.ring
    out: dict = {}
    for (a, q), c in f.terms.items():
        u, v = a[i - 1], a[i]
        if u == v:
            continue
        lo, hi, s = (v, u, 1) if u > v else (u, v, -1)
        for p in range(hi - lo):
            b = list(a)
            b[i - 1], b[i] = lo + p, lo + hi - lo - 1 - p
            key = (tuple(b), q)
            val = c * s
            out[key] = out[key] + val if key in out else val
    quotient = QPoly(ring, out)
    if quotient * (ring.x(i) - ring.x(i + 1)) != f - f.swap_x(i):
        raise DivisionError(f"divided difference {i} is not exact")
    return quotient


def pi(i: int, f: QPoly) -> QPoly:
    """Isobaric operator: divided difference of (1 - x_{i+1}) f."""
    return divided_difference(i, one_minus_x(f.ring, i + 1) * f)


def pi_word(word: Sequence[int], f: QPoly) -> QPoly:
    """pi_{i1} ... pi_{ir} f (rightmost first)."""
    for i in reversed(word):
        f = pi(i, f)
    return f


# ---------------------------------------------------------------- Grothendieck polynomials


def top_grothendieck(m: int, ring: PolyRing) -> QPoly:
    """prod_{i + j <= m} (x_i + y_j - x_i y_j)."""
    out = ring.const(ring.one)
    for i in range(1, m):
        for j in range(1, m - i + 1):
            out = out * (ring.const(ring.one) - one_minus_x(ring, i) * (1 - y(j, ring.one.N)))
    return out


def grothendieck(w: Permutation, word: Sequence[int] | None = None) -> QPoly:
    """Double Grothendieck polynomial of w in S_m, in m x-variables over Z[P] of rank m."""
    m = len(w)
    ring = xy_ring(m)
    u = w.inverse() * weyl.longest(m)
    if word is None:
        word = weyl.reduced_word(u)
    elif weyl.from_word(word, m) != u or len(word) != u.length():
        raise ValueError(f"{word} is not a reduced word of {tuple(u)}")
    return pi_word(word, top_grothendieck(m, ring))


def dominant_grothendieck(w: Permutation) -> QPoly:
    """Closed form prod_i eta^{c_i}(x_i) for dominant w."""
    if not is_dominant_perm(w):
        raise ValueError(f"{tuple(w)} is not dominant")
    m = len(w)
    ring = xy_ring(m)
    out = ring.const(ring.one)
    for i, c in enumerate(code(w)[:-1], 1):
        out = out * eta(c, i, ring)
    return out


def word_independent(w: Permutation, limit: int = 2) -> bool:
    """grothendieck(w) agrees across (up to ``limit``) distinct reduced words."""
    u = w.inverse() * weyl.longest(len(w))
    words = weyl.all_reduced_words(u)[:limit]
    results = [grothendieck(w, wd) for wd in words]
    return all(r == results[0] for r in results)


# ---------------------------------------------------------------- quantum families


def F_poly(k: int, p: int, ring: PolyRing) -> QPoly:
    """sum_{|I|=p, I in [k]} prod_{i in I} (1-x_i) prod_{i in I, i+1 not in I} (1-Q_i)."""
    one = ring.const(ring.one)
    total = ring.zero()
    for I in combinations(range(1, k + 1), p):
        term = one
        for i in I:
            term = term * one_minus_x(ring, i)
            if i + 1 not in I:
                term = term * (one - ring.Q(i))
        total = total + term
    return total


def ehat(k: int, p: int, ring: PolyRing) -> QPoly:
    """sum_i (-1)^i binom(k-i, p-i) F_i^{(k)}: the quantization of e_p(x_1..x_k)."""
    total = ring.zero()
    for i in range(p + 1):
        total = total + F_poly(k, i, ring) * (laurent.sign(i) * math.comb(k - i, p - i))
    return total


def e_poly(k: int, p: int, ring: PolyRing) -> QPoly:
    return laurent.elementary([ring.x(j) for j in range(1, k + 1)], p, ring.const(ring.one))


def e_indices(n: int) -> list[tuple[int, ...]]:
    """(p_1..p_n) with 0 <= p_i <= i."""
    return list(product(*[range(i + 1) for i in range(1, n + 1)]))


def staircase(n: int) -> list[tuple[int, ...]]:
    """Exponents a with a_j <= n + 1 - j, j = 1..n."""
    return list(product(*[range(n + 2 - j) for j in range(1, n + 1)]))


def _product_family(n: int, factor, ring: PolyRing, P: Sequence[int]) -> QPoly:
    out = ring.const(ring.one)
    for k, p in enumerate(P, 1):
        if p:
            out = out * factor(k, p, ring)
    return out


def _integer_inverse(M: list[list[int]]) -> list[list[int]]:
    size = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(M)]
    for col in range(size):
        piv = next((r for r in range(col, size) if A[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [v / pv for v in A[col]]
        for r in range(size):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    inv = [[v for v in row[size:]] for row in A]
    if any(v.denominator != 1 for row in inv for v in row):
        raise ArithmeticError("matrix is not unimodular")
    return [[int(v) for v in row] for row in inv]


def integer_det(M: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    A = [list(r) for r in M]
    size, sgn, prev = len(A), 1, 1
    for k in range(size - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sgn = -sgn
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sgn * A[-1][-1] if size else 1


@lru_cache(maxsize=None)
def _e_change_of_basis(n: int) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    ring = PolyRing(n, 0, GroupAlgElem.one(1))
    idx, mons = e_indices(n), staircase(n)
    pos = {a: c for c, a in enumerate(mons)}
    M = []
    for P in idx:
        row = [0] * len(mons)
        for (a, _), c in _product_family(n, e_poly, ring, P).terms.items():
            row[pos[a]] = c.terms.get((0,), 0)
        M.append(row)
    inv = _integer_inverse(M)
    return tuple(idx), tuple(mons), tuple(tuple(r) for r in inv)


def e_expansion(f: QPoly, n: int) -> dict[tuple[int, ...], GroupAlgElem]:
    """Coefficients d_P with f = sum_P d_P e_{p_1}(x_1) e_{p_2}(x_1,x_2) ... e_{p_n}(x_1..x_n)."""
    idx, mons, inv = _e_change_of_basis(n)
    pos = {a: c for c, a in enumerate(mons)}
    out: dict[tuple[int, ...], GroupAlgElem] = {}
    for (a, q), c in f.terms.items():
        if any(q):
            raise ValueError("quantization expects a Q-free input")
        a_n = weyl_fit(a, n)
        if a_n not in pos:
            raise ValueError(f"monomial {a} lies outside the staircase span for n={n}; raise n")
        row = inv[pos[a_n]]
        for P, m in zip(idx, row):
            if m:
                out[P] = out[P] + c * m if P in out else c * m
    return {P: c for P, c in out.items() if not c.is_zero()}


def weyl_fit(a: Sequence[int], n: int) -> tuple[int, ...]:
    a = tuple(a)
    if any(a[n:]):
        raise ValueError(f"monomial {a} involves variables beyond x_{n}; raise n")
    return (a + (0,) * n)[:n]


def quantize(f: QPoly, n: int, nq: int | None = None) -> QPoly:
    """Replace each e_{p_1..p_n} by the product of the quantized factors; output has n x- and nq Q-variables."""
    nq = n if nq is None else nq
    ring = PolyRing(n, nq, f.ring.one, f.ring.cap)
    out = ring.zero()
    for P, c in e_expansion(f, n).items():
        out = out + _product_family(n, ehat, ring, P) * c
    return out


def quantum_grothendieck(w: Permutation, n: int | None = None) -> QPoly:
    """Quantization of G_w for w in S_{n+1}, in x_1..x_n and Q_1..Q_n."""
    n = len(w) - 1 if n is None else n
    if len(w) > n + 1:
        raise ValueError("permutation too large for n")
    g = grothendieck(w)
    if len(w) < n + 1:
        g = g.reshape(xy_ring(n + 1, len(w))).map_coeffs(lambda c: _widen(c, n + 1), xy_ring(n + 1))
    return quantize(g, n)


def _widen(c: GroupAlgElem, N: int) -> GroupAlgElem:
    """Embed Z[P] of a smaller rank using eps_j -> eps_j (j < old rank)."""
    out = GroupAlgElem.zero(N)
    for nu, k in c.terms.items():
        mu = weyl.zero_weight(N)
        for j, v in enumerate(nu, 1):
            if v:
                mu = weyl.weight_add(mu, weyl.weight_scale(v, weyl.epsilon(j, N)))
        out = out + laurent.e(mu) * k
    return out


# ---------------------------------------------------------------- hat families


def t_values(n: int, lattice: int | None = None) -> list[GroupAlgElem]:
    """e^{eps_1}, ..., e^{eps_n} in a lattice of rank n+1 (independent)."""
    lattice = lattice or n + 1
    return [laurent.e(weyl.epsilon(j, lattice)) for j in range(1, n + 1)]


def _t_part(i: int, k: int, n: int, one: GroupAlgElem) -> GroupAlgElem:
    t = t_values(n, one.N)
    if i > n:
        return one * 0
    return laurent.elementary(t[: min(k, n)], i, one)


def fhat(k: int, i: int, n: int, ring: PolyRing) -> QPoly:
    """e_i(1 - x_1..x_k) minus the matching torus term (1 when i = 0)."""
    if i == 0:
        return ring.const(ring.one)
    plain = laurent.elementary([one_minus_x(ring, j) for j in range(1, k + 1)], i, ring.const(ring.one))
    return plain - ring.const(_t_part(i, k, n, ring.one))


def Fhat(k: int, i: int, n: int, ring: PolyRing) -> QPoly:
    """Quantization of fhat: F_i^{(k)} minus the same torus term."""
    if i == 0:
        return ring.const(ring.one)
    return F_poly(k, i, ring) - ring.const(_t_part(i, k, n, ring.one))


def family(kind: str, I: Sequence[int], n: int, ring: PolyRing) -> QPoly:
    maker = {"fhat": fhat, "Fhat": Fhat}[kind]
    out = ring.const(ring.one)
    for k, i in enumerate(I, 1):
        out = out * maker(k, i, n, ring)
    return out


def plain_family(kind: str, I: Sequence[int], ring: PolyRing) -> QPoly:
    out = ring.const(ring.one)
    for k, i in enumerate(I, 1):
        if i:
            if kind == "f":
                out = out * laurent.elementary([one_minus_x(ring, j) for j in range(1, k + 1)], i, ring.const(ring.one))
            else:
                out = out * F_poly(k, i, ring)
    return out


def hat_expansion(kind: str, I: Sequence[int], n: int, ring: PolyRing) -> dict[tuple[int, ...], GroupAlgElem]:
    """Expand a hat product in the plain product family by distributing the torus terms."""
    out: dict[tuple[int, ...], GroupAlgElem] = {}
    support = [k for k, i in enumerate(I) if i]
    for r in range(len(support) + 1):
        for S in combinations(support, r):
            kept = tuple(i if (k in S) else 0 for k, i in enumerate(I))
            c = ring.one
            for k in support:
                if k not in S:
                    c = c * (-_t_part(I[k], k + 1, n, ring.one))
            out[kept] = out[kept] + c if kept in out else c
    return {P: c for P, c in out.items() if not c.is_zero()}


def verify_hat_basis(k: int) -> CheckReport:
    """
    Both hat families are bases of the staircase module L_{k+1} (with Q_1..Q_k
    adjoined): each is unitriangular over its plain family by total index,
    the plain f family is unimodular over the monomials, and the plain F
    family reduces to it at Q = 0.
    """
    n = k
    lattice = n + 1
    ring = PolyRing(k, k, GroupAlgElem.one(lattice))
    idx = e_indices(k)
    mons = staircase(k)
    pos = {a: c for c, a in enumerate(mons)}
    checks: dict[str, bool] = {}
    for kind, plain in (("fhat", "f"), ("Fhat", "F")):
        tri = True
        for I in idx:
            exp = hat_expansion(kind, I, n, ring)
            if exp.get(tuple(I)) != ring.one or any(sum(P) >= sum(I) for P in exp if P != tuple(I)):
                tri = False
            rebuilt = ring.zero()
            for P, c in exp.items():
                rebuilt = rebuilt + plain_family(plain, P, ring) * c
            if rebuilt != family(kind, I, n, ring):
                tri = False
        checks[f"{kind}_unitriangular"] = tri
    M = []
    support_ok = True
    for I in idx:
        fI = plain_family("f", I, ring)
        FI = plain_family("F", I, ring)
        if any(weyl_fit(a, k) not in pos for a, _ in FI.terms):
            support_ok = False
        if FI.classical() != fI:
            support_ok = False
        row = [0] * len(mons)
        for (a, _), c in fI.terms.items():
            row[pos[a]] = c.terms.get((0,) * lattice, 0)
        M.append(row)
    det = integer_det(M)
    checks["square"] = len(idx) == len(mons) == math.factorial(k + 1)
    checks["f_unimodular"] = det in (1, -1)
    checks["F_support_and_limit"] = support_ok
    return CheckReport("hat_basis", {"k": k}, checks, {"det": det, "size": len(idx)})


# ---------------------------------------------------------------- ideal membership


def eta_check(n: int, mode: str = "exact", seed: int = 0) -> CheckReport:
    """eta^n(x_1) lies in the classical n-variable ideal, along with the intermediate identities."""
    ideal = torus_ideal(n, quantum=False, cap=0, mode=mode, seed=seed)
    ring = PolyRing(n, n, GroupAlgElem.one(n + 1), 0)
    t = t_values(n)
    one = ring.const(ring.one)
    et = eta(n, 1, ring)
    x1m = ring.x(1) - one
    ys = [1 - ti.inverse() for ti in t]
    expanded = one
    for a in range(1, n + 1):
        expanded = expanded + x1m ** a * laurent.elementary([1 - yy for yy in ys], a, ring.one)
    en = laurent.elementary(t, n, ring.one)
    middle = ring.const(en)
    for a in range(1, n + 1):
        middle = middle + x1m ** a * laurent.elementary(t, n - a, ring.one)
    z = [one_minus_x(ring, j) for j in range(1, n + 1)]
    swapped = laurent.elementary(z, n, one)
    for a in range(1, n + 1):
        swapped = swapped + x1m ** a * laurent.elementary(z, n - a, one)
    checks = {
        "expansion": et == expanded,
        "multiply_by_unit": et * en == middle,
        "swap_mod_ideal": ideal.contains(middle - swapped),
        "product_vanishes": ideal.contains(swapped),
        "member": ideal.contains(et),
    }
    return CheckReport("eta_member", {"n": n, "mode": mode}, checks)


def last_moved_permutations(n: int) -> list[Permutation]:
    return [w for w in weyl.all_permutations(n + 1) if w(n + 1) != n + 1]


def verify_grothendieck_membership(n: int, mode: str = "exact", seed: int = 0, cap: int = 2, quantum: bool = True) -> CheckReport:
    """
    Classical: G_w reduces to 0 modulo the n-variable ideal whenever w(n+1) != n+1.

    Quantum: the quantized G_w reduces to 0 modulo the n-variable quantum
    ideal whose generators keep every factor (1-Q_j), j <= n.  Against the
    ideal with Q_n set to 0 in the generators the residue is only divisible
    by Q_n; those residues are recorded in the details.
    """
    classical = torus_ideal(n, quantum=False, cap=cap, mode=mode, seed=seed)
    qideal = torus_ideal(n, quantum=True, cap=cap, mode=mode, seed=seed, last_q=True)
    cut = torus_ideal(n, quantum=True, cap=cap, mode=mode, seed=seed)
    ring_n = PolyRing(n, n, GroupAlgElem.one(n + 1), cap)
    checks: dict[str, bool] = {}
    residues: dict[str, str] = {}
    divisible = True
    cex = None
    for w in last_moved_permutations(n):
        name = "".join(map(str, w))
        g = grothendieck(w).reshape(ring_n)
        ok = classical.contains(g)
        checks[name] = ok
        if not ok and cex is None:
            cex = {"w": list(w), "residue": str(classical.normal_form(g))}
        if quantum:
            gq = quantize(grothendieck(w), n).truncate(cap)
            r = qideal.normal_form(gq)
            checks["Q:" + name] = r.is_zero()
            if not r.is_zero() and cex is None:
                cex = {"w": list(w), "quantum_residue": str(r)}
            rc = cut.normal_form(gq)
            residues[name] = str(rc)
            divisible = divisible and all(q[n - 1] >= 1 for _, q in rc.terms)
    control = [w for w in weyl.all_permutations(n + 1) if w(n + 1) == n + 1]
    checks["controls_not_members"] = all(not classical.contains(grothendieck(w).reshape(ring_n)) for w in control)
    if quantum:
        checks["Q:controls_not_members"] = all(
            not qideal.contains(quantize(grothendieck(w), n).truncate(cap)) for w in control)
    details = {"residues_mod_Qn_cut_ideal": residues, "cut_residues_divisible_by_Qn": divisible,
               "prime": classical.prime}
    checks["eta"] = eta_check(n, mode, seed).ok
    return CheckReport("grothendieck_membership", {"n": n, "mode": mode, "cap": cap}, checks, details, cex)


def verify_stability(n: int, k: int) -> bool:
    """Fhat_i^{(j)} with x_{n+1..k} = 1 and Q_{n..k} = 0 equals Fhat_i^{(n)}|_{Q_n=0} or 0."""
    ring = PolyRing(k, k, GroupAlgElem.one(n + 1))
    for j in range(n + 1, k + 1):
        for i in range(1, j + 1):
            lhs = Fhat(j, i, n, ring)
            for v in range(n + 1, k + 1):
                lhs = lhs.eval_x(v, ring.one)
            lhs = lhs.drop_Q(range(n, k + 1))
            rhs = Fhat(n, i, n, ring).drop_Q([n]) if i <= n else ring.zero()
            if lhs != rhs:
                return False
    return True


def dominant_agreement(m: int) -> bool:
    return all(grothendieck(w) == dominant_grothendieck(w) for w in weyl.all_permutations(m) if is_dominant_perm(w))


def ehat_limit(kmax: int = 5) -> bool:
    """Ehat_p^{(k)} at Q = 0 is e_p(x_1..x_k)."""
    for k in range(1, kmax + 1):
        ring = PolyRing(k, k, GroupAlgElem.one(1))
        for p in range(k + 1):
            if ehat(k, p, ring).classical() != e_poly(k, p, ring):
                return False
    return True


def to_json(f: QPoly) -> dict:
    return f.to_json()


def gate() -> bool:
    """pi_1 G_{s_1} = 1 in S_2."""
    g = grothendieck(weyl.Permutation((2, 1)))
    return pi(1, g) == g.ring.const(g.ring.one)

