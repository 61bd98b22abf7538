"""
Polynomial presentations of (quantum) equivariant K-rings of type A flag
manifolds.

Polynomials live in R[[Q]][x_1..x_N] with R = Z[P] (exact mode) or a prime
field (modp mode, where each e^{e_i} is sent to a random nonzero residue).
The ideal is generated by

    g_l = sum_{|J| = l} prod_{j in J, j+1 not in J, j < N} (1 - Q_j) prod_{j in J} (1 - x_j) - e_l(t),

and normal forms are taken with respect to lifted reducers whose Q = 0 parts
have leading monomials x_k^{N-k+1} (lex order, x_N largest).  The reduced
monomials are x^a with a_k <= N - k, giving N! basis elements.

>>> ring = main_ideal(1, quantum=True, cap=2)
>>> x1, x2 = ring.ring.x(1), ring.ring.x(2)
>>> ring.generators[1] == (1 - x1) * (1 - x2) - 1
True
>>> ring.normal_form(ring.generators[0]).is_zero()
True
>>> ring.basis
[(0, 0), (1, 0)]
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Callable, Iterable, Mapping, Sequence

from . import laurent, weyl
from .laurent import Fp, GroupAlgElem, NovikovElem

Mono = tuple[tuple[int, ...], tuple[int, ...]]


def _add_exp(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _lex_key(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(a))


@dataclass(frozen=True)
class PolyRing:
    """Shape data for QPoly: number of x- and Q-variables, Q-cap (None = no truncation), unit."""

    nx: int
    nq: int
    one: Any
    cap: int | None = None

    @property
    def zero_coeff(self):
        return self.one * 0

    def zero(self) -> "QPoly":
        return QPoly(self, {})

    def const(self, c) -> "QPoly":
        return QPoly(self, {((0,) * self.nx, (0,) * self.nq): c})

    def x(self, j: int) -> "QPoly":
        a = [0] * self.nx
        a[j - 1] = 1
        return QPoly(self, {(tuple(a), (0,) * self.nq): self.one})

    def Q(self, i: int) -> "QPoly":
        q = [0] * self.nq
        q[i - 1] = 1
        return QPoly(self, {((0,) * self.nx, tuple(q)): self.one})

    def monomial(self, a: Sequence[int], q: Sequence[int] | None = None, c=None) -> "QPoly":
        q = (0,) * self.nq if q is None else tuple(q)
        return QPoly(self, {(tuple(a), q): self.one if c is None else c})

    def with_cap(self, cap: int | None) -> "PolyRing":
        return PolyRing(self.nx, self.nq, self.one, cap)


class QPoly:
    """Finite map (x-exponent, Q-exponent) -> coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Mono, Any] | None = None):
        self.ring = ring
        self.terms: dict[Mono, Any] = {}
        for (a, q), c in (terms or {}).items():
            if isinstance(c, int):
                c = ring.one * c
            if c.is_zero():
                continue
            a, q = tuple(a), tuple(q)
            if len(a) != ring.nx or len(q) != ring.nq:
                raise weyl.ConventionError(f"monomial {(a, q)} does not fit {ring}")
            if ring.cap is not None and sum(q) > ring.cap:
                continue
            key = (a, q)
            if key in self.terms:
                s = self.terms[key] + c
                if s.is_zero():
                    del self.terms[key]
                else:
                    self.terms[key] = s
            else:
                self.terms[key] = c

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict[Mono, Any]) -> "QPoly":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # -- arithmetic
    def _lift(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            if k in t:
                s = t[k] + c
                if s.is_zero():
                    del t[k]
                else:
                    t[k] = s
            else:
                t[k] = c
        return QPoly._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            if isinstance(other, int) and other == 0:
                return self.ring.zero()
            return QPoly(self.ring, {k: c * other for k, c in self.terms.items()})
        cap = self.ring.cap
        t: dict[Mono, Any] = {}
        for (a1, q1), c1 in self.terms.items():
            d1 = sum(q1)
            for (a2, q2), c2 in other.terms.items():
                if cap is not None and d1 + sum(q2) > cap:
                    continue
                k = (_add_exp(a1, a2), _add_exp(q1, q2))
                v = c1 * c2
                t[k] = t[k] + v if k in t else v
        return QPoly._raw(self.ring, {k: v for k, v in t.items() if not v.is_zero()})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = self.ring.const(self.ring.one)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            other = self._lift(other)
        return (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # -- structure
    def truncate(self, cap: int | None) -> "QPoly":
        ring = self.ring.with_cap(cap)
        return QPoly(ring, self.terms)

    def q_degree(self) -> int:
        return max((sum(q) for _, q in self.terms), default=0)

    def x_degree(self) -> int:
        return max((sum(a) for a, _ in self.terms), default=0)

    def q_slice(self, d: int) -> "QPoly":
        return QPoly._raw(self.ring, {k: c for k, c in self.terms.items() if sum(k[1]) == d})

    def drop_Q(self, indices: Iterable[int]) -> "QPoly":
        """Set the listed Q_i to 0."""
        idx = [i - 1 for i in indices]
        return QPoly._raw(self.ring, {k: c for k, c in self.terms.items() if all(k[1][i] == 0 for i in idx)})

    def classical(self) -> "QPoly":
        return self.drop_Q(range(1, self.ring.nq + 1))

    def eval_x(self, j: int, value) -> "QPoly":
        """Substitute a coefficient for x_j (the exponent slot is kept, set to 0)."""
        t: dict[Mono, Any] = {}
        for (a, q), c in self.terms.items():
            k = a[j - 1]
            v = c
            for _ in range(k):
                v = v * value
            a2 = a[: j - 1] + (0,) + a[j:]
            key = (a2, q)
            t[key] = t[key] + v if key in t else v
        return QPoly._raw(self.ring, {k: v for k, v in t.items() if not v.is_zero()})

    def swap_x(self, i: int) -> "QPoly":
        """Exchange x_i and x_{i+1}."""
        t = {}
        for (a, q), c in self.terms.items():
            b = list(a)
            b[i - 1], b[i] = b[i], b[i - 1]
            t[(tuple(b), q)] = c
        return QPoly._raw(self.ring, t)

    def reshape(self, ring: PolyRing) -> "QPoly":
        """Pad or drop trailing variables; dropped variables must not occur."""
        t = {}
        for (a, q), c in self.terms.items():
            a2, q2 = _fit(a, ring.nx), _fit(q, ring.nq)
            t[(a2, q2)] = c
        return QPoly(ring, t)

    def map_coeffs(self, f: Callable, ring: PolyRing) -> "QPoly":
        return QPoly(ring, {k: f(c) for k, c in self.terms.items()})

    def coefficient(self, a: Sequence[int], q: Sequence[int] | None = None):
        q = (0,) * self.ring.nq if q is None else tuple(q)
        return self.terms.get((tuple(a), q), self.ring.zero_coeff)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0][1]), kv[0][1], sum(kv[0][0]), kv[0][0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, q), c in self.items():
            mono = "".join(_var("x", i, e) for i, e in enumerate(a, 1)) + "".join(_var("Q", i, e) for i, e in enumerate(q, 1))
            if not mono:
                parts.append(f"({c})" if not _is_one(c) else "1")
            elif _is_one(c):
                parts.append(mono)
            elif _is_one(-c):
                parts.append("-" + mono)
            else:
                parts.append(f"({c}){mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        out = []
        for (a, q), c in self.items():
            coeff = c.to_json() if isinstance(c, GroupAlgElem) else {"mod": Fp.p, "value": c.v}
            out.append({"xdeg": list(a), "qdeg": list(q), "coeff": coeff})
        return {"nx": self.ring.nx, "nq": self.ring.nq, "terms": out}

    @classmethod
    def from_json(cls, data: Mapping, ring: PolyRing) -> "QPoly":
        terms: dict[Mono, Any] = {}
        for t in data["terms"]:
            raw = t["coeff"]
            if isinstance(raw, int):
                c = ring.one * raw
            elif "value" in raw:
                c = Fp(int(raw["value"]))
            else:
                c = GroupAlgElem.from_json(raw, ring.one.N)
            key = (_fit(t["xdeg"], ring.nx), _fit(t.get("qdeg", []), ring.nq))
            terms[key] = terms[key] + c if key in terms else c
        return cls(ring, terms)


def _fit(v: Sequence[int], length: int) -> tuple[int, ...]:
    v = tuple(v)
    if len(v) > length and any(v[length:]):
        raise weyl.ConventionError(f"exponent {v} uses variables beyond {length}")
    return (v + (0,) * length)[:length]


def _var(name: str, i: int, e: int) -> str:
    return "" if e == 0 else (f"{name}{i}" if e == 1 else f"{name}{i}^{e}")


def _is_one(c) -> bool:
    return c == c * 0 + 1 if isinstance(c, GroupAlgElem) else c == 1


# ---------------------------------------------------------------- generators


def one_minus_x(ring: PolyRing, j: int) -> QPoly:
    return ring.const(ring.one) - ring.x(j)


def generator(ring: PolyRing, N: int, l: int, tvals: Sequence, quantum: bool = True,
              q_factor: Callable[[int], bool] | None = None) -> QPoly:
    """sum_{|J|=l} prod_{j in J, j+1 not in J, q_factor(j)} (1-Q_j) prod (1-x_j) - e_l(t)."""
    q_factor = q_factor or (lambda j: j < N)
    total = ring.zero()
    one = ring.const(ring.one)
    for J in combinations(range(1, N + 1), l):
        term = one
        for j in J:
            term = term * one_minus_x(ring, j)
            if quantum and j + 1 not in J and q_factor(j):
                term = term * (one - ring.Q(j))
        total = total + term
    return total - ring.const(laurent.elementary(list(tvals), l, ring.one))


@dataclass
class IdealGens:
    n: int
    quantum: bool
    generators: list[QPoly]

    def to_json(self) -> dict:
        return {"n": self.n, "quantum": self.quantum, "generators": [g.to_json() for g in self.generators]}


def ideal_generators(n: int, quantum: bool = True, cap: int | None = 3) -> IdealGens:
    """Generators g_1..g_{n+1} of the presentation of the flag manifold of SL_{n+1}."""
    N = n + 1
    ring = PolyRing(N, n, GroupAlgElem.one(N), cap)
    t = [laurent.e(weyl.epsilon(j, N)) for j in range(1, N + 1)]
    return IdealGens(n, quantum, [generator(ring, N, l, t, quantum) for l in range(1, N + 1)])


# ---------------------------------------------------------------- ideal engine


class PivotError(weyl.ConventionError):
    """A reducer lost its expected unit leading term."""


@dataclass
class Ideal:
    """
    Ideal generated by g_1..g_N in N x-variables over R[[Q_1..Q_nq]] (Q-cap ``cap``).

    ``tvals`` are exact Z[P] values of t_1..t_N.  In modp mode coefficients
    are pushed to F_p through a random point chosen from ``seed``.
    """

    N: int
    tvals: list[GroupAlgElem]
    nq: int
    cap: int = 3
    quantum: bool = True
    mode: str = "exact"
    seed: int = 0
    last_q: bool = False
    generators: list[QPoly] = field(init=False)
    exact_generators: list[QPoly] = field(init=False)

    def __post_init__(self):
        if self.mode not in ("exact", "modp"):
            raise ValueError(f"unknown mode {self.mode!r}")
        lattice = self.tvals[0].N
        self.exact_ring = PolyRing(self.N, self.nq, GroupAlgElem.one(lattice), self.cap)
        qf = (lambda j: True) if self.last_q else None
        self.exact_generators = [generator(self.exact_ring, self.N, l, self.tvals, self.quantum, qf)
                                 for l in range(1, self.N + 1)]
        if self.mode == "modp":
            self.point = laurent.random_point(lattice, self.seed)
            self.ring = PolyRing(self.N, self.nq, Fp(1), self.cap)
            self.generators = [self.to_ring(g) for g in self.exact_generators]
        else:
            self.point = None
            self.ring = self.exact_ring
            self.generators = list(self.exact_generators)
        self._reducers = [self._build_reducer(k) for k in range(1, self.N + 1)]
        self._memo: dict[tuple[tuple[int, ...], int], dict[Mono, Any]] = {}

    # -- coefficient handling
    def coeff(self, g):
        if isinstance(g, int):
            return self.ring.one * g
        if self.mode == "modp" and isinstance(g, GroupAlgElem):
            return laurent.to_field(g, self.point)
        return g

    def to_ring(self, p: QPoly) -> QPoly:
        """Move an exact polynomial into this engine's coefficient ring and shape."""
        if p.ring.nx != self.N or p.ring.nq != self.nq:
            p = p.reshape(PolyRing(self.N, self.nq, p.ring.one, self.cap))
        if self.mode == "modp" and not isinstance(p.ring.one, Fp):
            return p.map_coeffs(self.coeff, self.ring)
        return QPoly(self.ring, p.terms)

    @property
    def prime(self) -> int | None:
        return Fp.p if self.mode == "modp" else None

    # -- reducers
    def exponent_bound(self, k: int) -> int:
        return self.N - k + 1

    @property
    def basis(self) -> list[tuple[int, ...]]:
        return sorted(product(*[range(self.N - k + 1) for k in range(1, self.N + 1)]), key=lambda a: (sum(a), _lex_key(a)))

    def _build_reducer(self, k: int) -> dict[Mono, Any]:
        m = self.exponent_bound(k)
        ring = self.ring
        z = [one_minus_x(ring, j) for j in range(1, k + 1)]
        one = ring.const(ring.one)
        G = ring.zero()
        for i in range(1, m + 1):
            h = laurent.complete(z, m - i, one)
            G = G - h * self.generators[i - 1] * laurent.sign(i)
        lead = tuple(m if j == k - 1 else 0 for j in range(self.N))
        zero_q = (0,) * self.nq
        c = G.terms.get((lead, zero_q))
        if c is None or not (c == ring.one * 1 or c == ring.one * -1):
            raise PivotError(f"reducer {k} has leading coefficient {c}")
        for (a, q), _ in G.terms.items():
            if sum(q) == 0 and (a, q) != (lead, zero_q):
                if any(a[k:]) or _lex_key(a) >= _lex_key(lead):
                    raise PivotError(f"reducer {k}: term x^{a} is not below x_{k}^{m}")
        cinv = c  # c = +-1 is its own inverse
        # x_k^m == -c^{-1} * (G - c x_k^m)
        return {key: -(v * cinv) for key, v in G.terms.items() if key != (lead, zero_q)}

    def reducer(self, k: int) -> QPoly:
        """An ideal element whose Q-free part has leading term +-x_k^{N-k+1}."""
        m = self.exponent_bound(k)
        lead = tuple(m if j == k - 1 else 0 for j in range(self.N))
        return self.ring.monomial(lead) - QPoly(self.ring, self._reducers[k - 1])

    @property
    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [tuple(self.exponent_bound(k) if j == k - 1 else 0 for j in range(self.N)) for k in range(1, self.N + 1)]

    # -- normal form
    def _nf_mono(self, a: tuple[int, ...], budget: int) -> dict[Mono, Any]:
        key = (a, budget)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        k = next((k for k in range(self.N, 0, -1) if a[k - 1] >= self.exponent_bound(k)), None)
        zero_q = (0,) * self.nq
        if k is None:
            out = {(a, zero_q): self.ring.one}
        else:
            rest = list(a)
            rest[k - 1] -= self.exponent_bound(k)
            out: dict[Mono, Any] = {}
            for (e, q), c in self._reducers[k - 1].items():
                d = sum(q)
                if d > budget:
                    continue
                sub = self._nf_mono(_add_exp(rest, e), budget - d)
                for (b, q2), c2 in sub.items():
                    if d + sum(q2) > budget:
                        continue
                    kk = (b, _add_exp(q, q2))
                    v = c * c2
                    out[kk] = out[kk] + v if kk in out else v
            out = {kk: v for kk, v in out.items() if not v.is_zero()}
        self._memo[key] = out
        return out

    def normal_form(self, p: QPoly) -> QPoly:
        """Reduced representative of p; zero iff p lies in the ideal (through Q-degree cap)."""
        p = self.to_ring(p)
        out: dict[Mono, Any] = {}
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 20000))
        try:
            for (a, q), c in p.terms.items():
                d = sum(q)
                if d > self.cap:
                    continue
                for (b, q2), c2 in self._nf_mono(a, self.cap - d).items():
                    kk = (b, _add_exp(q, q2))
                    v = c * c2
                    out[kk] = out[kk] + v if kk in out else v
        finally:
            sys.setrecursionlimit(limit)
        return QPoly(self.ring, out)

    def coordinates(self, p: QPoly) -> dict[tuple[int, ...], QPoly]:
        """Residue as basis monomial -> Q-series coefficient (a Q-only QPoly)."""
        r = self.normal_form(p)
        qring = PolyRing(0, self.nq, self.ring.one, self.cap)
        out: dict[tuple[int, ...], dict] = {}
        for (a, q), c in r.terms.items():
            out.setdefault(a, {})[((), q)] = c
        return {a: QPoly(qring, t) for a, t in out.items()}

    def contains(self, p: QPoly) -> bool:
        return self.normal_form(p).is_zero()

    def multiplication_matrix(self, j: int) -> dict[tuple[int, ...], QPoly]:
        """Normal forms of x_j * b for every basis monomial b."""
        return {b: self.normal_form(self.ring.x(j) * self.ring.monomial(b)) for b in self.basis}


def main_ideal(n: int, quantum: bool = True, cap: int = 3, mode: str = "exact", seed: int = 0) -> Ideal:
    """I^Q (or I) for the flag manifold of SL_{n+1}: N = n + 1 variables, t_j = e^{eps_j}."""
    N = n + 1
    t = [laurent.e(weyl.epsilon(j, N)) for j in range(1, N + 1)]
    return Ideal(N, t, n, cap, quantum, mode, seed)


def torus_ideal(n: int, quantum: bool = True, cap: int = 3, mode: str = "exact", seed: int = 0,
                last_q: bool = False) -> Ideal:
    """
    The n-variable ideal with n algebraically independent torus characters.

    Generators are e_i(1-x) - e_i(t) (classical) or their quantum deformation
    with factors (1-Q_j) for j < n.  With ``last_q`` the factor (1-Q_n) is kept
    too; otherwise Q_n is present as a coefficient only.
    """
    t = [laurent.e(weyl.epsilon(j, n + 1)) for j in range(1, n + 1)]
    return Ideal(n, t, n, cap, quantum, mode, seed, last_q)


# ---------------------------------------------------------------- reports


@dataclass
class CheckReport:
    name: str
    params: dict
    checks: dict[str, bool]
    details: dict = field(default_factory=dict)
    counterexample: Any = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"name": self.name, "params": self.params, "ok": self.ok, "checks": self.checks,
                "details": self.details, "counterexample": self.counterexample}


def fixed_point_values(w: weyl.Permutation, tvals: Sequence[GroupAlgElem]) -> list[GroupAlgElem]:
    """x_j -> 1 - t_{w(j)}."""
    return [1 - tvals[w(j) - 1] for j in range(1, len(w) + 1)]


def check_fixed_points(n: int) -> tuple[bool, Any]:
    """Every torus fixed point annihilates the classical generators."""
    ideal = main_ideal(n, quantum=False, cap=0)
    for w in weyl.all_permutations(n + 1):
        vals = fixed_point_values(w, ideal.tvals)
        for l, g in enumerate(ideal.exact_generators, 1):
            h = g
            for j, v in enumerate(vals, 1):
                h = h.eval_x(j, v)
            if not h.is_zero():
                return False, {"w": list(w), "l": l, "value": str(h)}
    return True, None


def verify_freeness(n: int, cap: int = 3, mode: str = "exact", seed: int = 0,
                    commutation: bool = True) -> CheckReport:
    """
    Check that the reduced monomials form a basis of the quotient over the
    truncated coefficient ring.

    The reducers have pairwise coprime pure-power leading terms with unit
    coefficients, so they form a standard basis of the ideal they generate;
    the quotient is then free on the reduced monomials once every original
    generator reduces to zero.  The remaining checks are consistency
    cross-checks of the implementation.
    """
    ideal = main_ideal(n, quantum=True, cap=cap, mode=mode, seed=seed)
    classical = main_ideal(n, quantum=False, cap=cap, mode=mode, seed=seed)
    N = n + 1
    basis = ideal.basis
    checks: dict[str, bool] = {}
    details: dict[str, Any] = {"rank": len(basis), "prime": ideal.prime, "seed": seed if mode == "modp" else None}
    cex = None

    checks["rank"] = len(basis) == math.factorial(N)
    lead = ideal.leading_monomials
    checks["coprime_leading_terms"] = all(
        sum(1 for v in a if v) == 1 for a in lead) and len({a.index(max(a)) for a in lead}) == N

    gens_zero = True
    for l, g in enumerate(ideal.generators, 1):
        for b in basis:
            r = ideal.normal_form(g * ideal.ring.monomial(b))
            if not r.is_zero():
                gens_zero = False
                cex = {"generator": l, "times": list(b), "residue": str(r)}
                break
        if not gens_zero:
            break
    checks["generators_reduce_to_zero"] = gens_zero

    checks["basis_is_reduced"] = all(ideal.normal_form(ideal.ring.monomial(b)) == ideal.ring.monomial(b) for b in basis)

    box = product(*[range(N + 1)] * N)
    spans = True
    for a in box:
        if sum(a) > N + 1:
            continue
        r = ideal.normal_form(ideal.ring.monomial(a))
        if any(x not in set(basis) for x, _ in r.terms):
            spans = False
            cex = {"monomial": list(a)}
            break
    checks["spans"] = spans

    # free rank of each Q-degree slice: (#Q-monomials of degree d) * N!
    details["slice_ranks"] = {d: math.comb(d + n - 1, n - 1) * len(basis) for d in range(cap + 1)}

    mats = [ideal.multiplication_matrix(j) for j in range(1, N + 1)]
    cmats = [classical.multiplication_matrix(j) for j in range(1, N + 1)]
    checks["classical_limit"] = all(mats[j][b].classical() == classical.to_ring(cmats[j][b]) for j in range(N) for b in basis)

    if commutation:
        comm = True
        for i in range(N):
            for j in range(i + 1, N):
                for b in basis:
                    lhs = ideal.normal_form(mats[j][b] * ideal.ring.x(i + 1))
                    rhs = ideal.normal_form(mats[i][b] * ideal.ring.x(j + 1))
                    if lhs != rhs:
                        comm = False
                        cex = {"pair": [i + 1, j + 1], "basis": list(b)}
        checks["multiplication_commutes"] = comm

    fp, fcex = check_fixed_points(n)
    checks["fixed_points"] = fp
    cex = cex or fcex
    return CheckReport("freeness", {"n": n, "cap": cap, "mode": mode}, checks, details, cex)


def verify_relation_reduction(n: int, cap: int = 4) -> CheckReport:
    """
    Substitute (1-Q_j)(1-x_j) for the classes of O(-eps_j) (and 1-x_{n+1}
    for j = n+1) into the quantum elementary combinations C^{n+1}_l, clear
    the factors 1/(1-Q_j) by Novikov inversion, and compare with the
    positive part of generator l.
    """
    N = n + 1
    lattice = N
    one = GroupAlgElem.one(lattice)
    checks: dict[str, bool] = {}
    cex = None

    def novikov_one_minus(j: int) -> NovikovElem:
        if j > n:
            return NovikovElem.scalar(1, lattice, n, cap)
        return NovikovElem.scalar(1, lattice, n, cap) - NovikovElem.Q(j, lattice, n, cap)

    def as_table(pairs: list[tuple[NovikovElem, tuple[int, ...]]]) -> dict:
        table: dict = {}
        for coeff, J in pairs:
            for q, c in coeff.terms.items():
                key = (J, q)
                table[key] = table[key] + c if key in table else c
        return {k: v for k, v in table.items() if not v.is_zero()}

    ideal = main_ideal(n, quantum=True, cap=cap)
    for l in range(0, N + 1):
        substituted, expected = [], []
        for J in combinations(range(1, N + 1), l):
            factor = NovikovElem.scalar(1, lattice, n, cap)
            for j in J:
                if j + 1 in J:
                    factor = factor * novikov_one_minus(j).inverse()
                factor = factor * novikov_one_minus(j)
            substituted.append((factor, J))
            target = NovikovElem.scalar(1, lattice, n, cap)
            for j in J:
                if j + 1 not in J:
                    target = target * novikov_one_minus(j)
            expected.append((target, J))
        ok = as_table(substituted) == as_table(expected)
        if ok and l >= 1:
            # expanding prod_{j in J}(1-x_j) recovers generator l after subtracting e_l(t)
            poly = ideal.ring.zero()
            for coeff, J in substituted:
                mono = ideal.ring.const(one)
                for j in J:
                    mono = mono * one_minus_x(ideal.ring, j)
                for q, c in coeff.terms.items():
                    mono_q = QPoly(ideal.ring, {((0,) * N, q): c})
                    poly = poly + mono * mono_q
            t_part = ideal.ring.const(laurent.elementary(ideal.tvals, l, one))
            ok = (poly - t_part) == ideal.exact_generators[l - 1] and ideal.contains(poly - t_part)
        checks[f"l={l}"] = ok
        if not ok and cex is None:
            cex = {"l": l}
    return CheckReport("relation_reduction", {"n": n, "cap": cap}, checks, {}, cex)


def verify_line_bundle_representative(n: int, K: Iterable[int], mode: str = "exact", seed: int = 0) -> CheckReport:
    """
    Line bundle identity in the classical presentation:

        prod_{i in K} prod_{j <= i} (1 - x_j) == sum_{v in W_K} (-1)^{l(v)} e^{mu} G_v(x, y)   mod I,

    with mu the sum of the fundamental weights in K and G_v the double
    Grothendieck polynomials in n+1 variables.
    """
    from . import groth

    K = sorted(set(K))
    N = n + 1
    ideal = main_ideal(n, quantum=False, cap=0, mode=mode, seed=seed)
    ring = ideal.exact_ring
    one = ring.one
    lhs = ring.const(one)
    for i in K:
        for j in range(1, i + 1):
            lhs = lhs * one_minus_x(ring, j)
    mu = weyl.zero_weight(N)
    for i in K:
        mu = weyl.weight_add(mu, weyl.fundamental(i, n))
    rhs = ring.zero()
    for v in weyl.parabolic_subgroup(n, frozenset(K)):
        G = groth.grothendieck(v).reshape(ring)
        rhs = rhs + G * (laurent.e(mu) * laurent.sign(v.length()))
    diff = ideal.normal_form(lhs - rhs)
    checks = {"congruent": diff.is_zero()}
    cex = None if diff.is_zero() else {"residue": str(diff)}
    return CheckReport("line_bundle_representative", {"n": n, "K": K, "mode": mode}, checks, {}, cex)


def verify_modp_agreement(n: int, polys: Iterable[QPoly], cap: int = 2, seeds: Sequence[int] = (0, 1, 2)) -> bool:
    """Exact and randomized membership verdicts coincide."""
    exact = main_ideal(n, cap=cap)
    rand = [main_ideal(n, cap=cap, mode="modp", seed=s) for s in seeds]
    for p in polys:
        verdict = exact.contains(p)
        if any(r.contains(p) != verdict for r in rand):
            return False
    return True


def random_poly(ring: PolyRing, rng, terms: int = 4, xmax: int = 2, qmax: int = 1) -> QPoly:
    """Small random polynomial with integer coefficients (for property tests)."""
    t: dict[Mono, Any] = {}
    for _ in range(terms):
        a = tuple(rng.randint(0, xmax) for _ in range(ring.nx))
        q = tuple(rng.randint(0, qmax) for _ in range(ring.nq))
        t[(a, q)] = ring.one * rng.randint(-3, 3)
    return QPoly(ring, t)

