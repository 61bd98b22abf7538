"""
The group algebra Z[P] of the type A weight lattice, its Novikov completion
truncated in the Q-variables, Demazure operators, and a prime field used for
randomized evaluation.

>>> N = 3
>>> x = GroupAlgElem.monomial(fundamental(1, 2))
>>> demazure(1, x)
0
>>> demazure(1, GroupAlgElem.monomial(weight_neg(fundamental(1, 2)))).num_terms()
2
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from . import weyl
from .weyl import Permutation, Weight, canonical, fundamental, simple_root, weight_neg  # noqa: F401

PRIME = (1 << 61) - 1


class GroupAlgElem:
    """Finite Z-linear combination of formal exponentials e^nu."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Mapping[Weight, int] | None = None):
        self.N = N
        self.terms: dict[Weight, int] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    w = canonical(w)
                    if len(w) != N:
                        raise weyl.ConventionError(f"weight {w} has wrong length for N={N}")
                    self.terms[w] = self.terms.get(w, 0) + c
            self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def _raw(cls, N: int, terms: dict[Weight, int]) -> "GroupAlgElem":
        obj = cls.__new__(cls)
        obj.N = N
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, nu: Sequence[int], coeff: int = 1) -> "GroupAlgElem":
        nu = canonical(nu)
        return cls._raw(len(nu), {nu: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int, N: int) -> "GroupAlgElem":
        return cls._raw(N, {(0,) * N: c} if c else {})

    @classmethod
    def zero(cls, N: int) -> "GroupAlgElem":
        return cls._raw(N, {})

    @classmethod
    def one(cls, N: int) -> "GroupAlgElem":
        return cls.constant(1, N)

    def _coerce(self, other) -> "GroupAlgElem":
        if isinstance(other, GroupAlgElem):
            if other.N != self.N:
                raise weyl.ConventionError("mixing group algebras of different rank")
            return other
        if isinstance(other, int):
            return GroupAlgElem.constant(other, self.N)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = t.get(w, 0) + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return GroupAlgElem._raw(self.N, t)

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgElem._raw(self.N, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return GroupAlgElem.zero(self.N)
            return GroupAlgElem._raw(self.N, {w: c * other for w, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict[Weight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                t[w] = t.get(w, 0) + c1 * c2
        return GroupAlgElem._raw(self.N, {w: c for w, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GroupAlgElem.one(self.N)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupAlgElem.constant(other, self.N)
        return isinstance(other, GroupAlgElem) and self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(sorted(self.terms.items()))

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def inverse(self) -> "GroupAlgElem":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[P]")
        (w, c), = self.terms.items()
        return GroupAlgElem._raw(self.N, {weight_neg(w): c})

    def act(self, w: Permutation) -> "GroupAlgElem":
        return GroupAlgElem._raw(self.N, {weyl.act(w, nu): c for nu, c in self.terms.items()})

    def conjugate(self) -> "GroupAlgElem":
        """e^nu -> e^{-nu}."""
        return GroupAlgElem._raw(self.N, {weight_neg(nu): c for nu, c in self.terms.items()})

    def evaluate(self, point: Sequence[int], p: int = PRIME) -> int:
        """Image under e^{e_i} -> point[i-1] (i <= N-1) in Z/p; e^{e_N} is forced to 1 by canonical form."""
        total = 0
        for nu, c in self.terms.items():
            v = c % p
            for x, k in zip(point, nu[:-1]):
                if k:
                    v = v * pow(x, k, p) % p
            total = (total + v) % p
        return total

    def divide_exact(self, g: "GroupAlgElem") -> "GroupAlgElem":
        """Return q with q*g == self; raise ArithmeticError if g does not divide."""
        if g.is_zero():
            raise ZeroDivisionError
        key = lambda w: w
        lead_g = max(g.terms, key=key)
        low_g = min(g.terms, key=key)
        cg = g.terms[lead_g]
        f = self
        if f.is_zero():
            return GroupAlgElem.zero(self.N)
        floor = tuple(a - b for a, b in zip(min(f.terms, key=key), low_g))
        q: dict[Weight, int] = {}
        while not f.is_zero():
            lf = max(f.terms, key=key)
            t = tuple(a - b for a, b in zip(lf, lead_g))
            c, r = divmod(f.terms[lf], cg)
            if r or t < floor:
                raise ArithmeticError("not divisible")
            q[t] = q.get(t, 0) + c
            f = f - GroupAlgElem._raw(self.N, {t: c}) * g
        return GroupAlgElem._raw(self.N, {w: c for w, c in q.items() if c})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for nu, c in sorted(self.terms.items()):
            mono = "1" if not any(nu) else "e^" + str(list(nu))
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [{"weight": list(w), "coeff": c} for w, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data: dict, N: int) -> "GroupAlgElem":
        return cls(N, {tuple(t["weight"]): int(t["coeff"]) for t in data["terms"]})


def sign(k: int) -> int:
    """(-1)^k as an int, also for negative k."""
    return -1 if k % 2 else 1


def e(nu: Sequence[int]) -> GroupAlgElem:
    return GroupAlgElem.monomial(nu)


# ---------------------------------------------------------------- Demazure


def demazure(i: int, f: GroupAlgElem) -> GroupAlgElem:
    """D_i e^nu = (e^nu - e^{alpha_i} e^{s_i nu}) / (1 - e^{alpha_i}), via the closed form."""
    N = f.N
    a = simple_root(i).weight(N)
    out: dict[Weight, int] = {}

    def push(nu, c):
        v = out.get(nu, 0) + c
        if v:
            out[nu] = v
        else:
            out.pop(nu, None)

    for nu, c in f.terms.items():
        k = nu[i - 1] - nu[i]
        if k <= 0:
            for p in range(0, -k + 1):
                push(tuple(x + p * y for x, y in zip(nu, a)), c)
        elif k >= 2:
            for p in range(1, k):
                push(tuple(x - p * y for x, y in zip(nu, a)), -c)
    return GroupAlgElem._raw(N, out)


def demazure_by_division(i: int, f: GroupAlgElem) -> GroupAlgElem:
    """The same operator computed as an exact quotient in Z[P]."""
    N = f.N
    a = e(simple_root(i).weight(N))
    s = weyl.simple(i, N)
    return (f - a * f.act(s)).divide_exact(1 - a)


def demazure_word(word: Sequence[int], f: GroupAlgElem) -> GroupAlgElem:
    for i in reversed(word):
        f = demazure(i, f)
    return f


def leibniz_rhs(i: int, nu: Sequence[int], mu: Sequence[int]) -> GroupAlgElem:
    """((e^nu - e^{s_i nu}) / (1 - e^{alpha_i})) e^mu + e^{s_i nu} D_i(e^mu)."""
    N = len(nu)
    s = weyl.simple(i, N)
    a = e(simple_root(i).weight(N))
    first = (e(nu) - e(weyl.act(s, nu))).divide_exact(1 - a) * e(mu)
    return first + e(weyl.act(s, nu)) * demazure(i, e(mu))


# ---------------------------------------------------------------- symmetric functions


def elementary(values: Sequence, l: int, one):
    """e_l of a list of ring elements."""
    total = one * 0
    for J in combinations(range(len(values)), l):
        term = one
        for j in J:
            term = term * values[j]
        total = total + term
    return total


def complete(values: Sequence, k: int, one):
    """h_k of a list of ring elements."""
    total = one * 0
    for exps in _compositions(k, len(values)):
        term = one
        for v, a in zip(values, exps):
            for _ in range(a):
                term = term * v
        total = total + term
    return total


def _compositions(k: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if k == 0:
            yield ()
        return
    for a in range(k + 1):
        for rest in _compositions(k - a, parts - 1):
            yield (a,) + rest


def neg_eps(N: int) -> list[GroupAlgElem]:
    return [e(weight_neg(weyl.epsilon(i, N))) for i in range(1, N + 1)]


def E_sym(N: int, l: int) -> GroupAlgElem:
    """sum over |J| = l of e^{-e_J}."""
    return elementary(neg_eps(N), l, GroupAlgElem.one(N))


def H_sym(N: int, m: int, k: int) -> GroupAlgElem:
    """Complete homogeneous sum of degree k in e^{-e_1}, ..., e^{-e_m}."""
    return complete(neg_eps(N)[:m], k, GroupAlgElem.one(N))


# ---------------------------------------------------------------- Novikov ring


class NovikovElem:
    """Truncated power series in Q_1..Q_r over Z[P], total Q-degree at most cap."""

    __slots__ = ("N", "r", "cap", "terms")

    def __init__(self, N: int, r: int, cap: int, terms: Mapping[tuple[int, ...], GroupAlgElem] | None = None):
        self.N, self.r, self.cap = N, r, cap
        self.terms: dict[tuple[int, ...], GroupAlgElem] = {}
        for q, c in (terms or {}).items():
            if sum(q) <= cap and not c.is_zero():
                self.terms[tuple(q)] = c

    @classmethod
    def scalar(cls, c: GroupAlgElem | int, N: int, r: int, cap: int) -> "NovikovElem":
        if isinstance(c, int):
            c = GroupAlgElem.constant(c, N)
        return cls(N, r, cap, {(0,) * r: c})

    @classmethod
    def Q(cls, i: int, N: int, r: int, cap: int) -> "NovikovElem":
        q = [0] * r
        q[i - 1] = 1
        return cls(N, r, cap, {tuple(q): GroupAlgElem.one(N)})

    def _coerce(self, other):
        if isinstance(other, NovikovElem):
            return other
        if isinstance(other, (int, GroupAlgElem)):
            return NovikovElem.scalar(other, self.N, self.r, self.cap)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for q, c in other.terms.items():
            t[q] = t[q] + c if q in t else c
        return NovikovElem(self.N, self.r, min(self.cap, other.cap), t)

    __radd__ = __add__

    def __neg__(self):
        return NovikovElem(self.N, self.r, self.cap, {q: -c for q, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        cap = min(self.cap, other.cap)
        t: dict[tuple[int, ...], GroupAlgElem] = {}
        for q1, c1 in self.terms.items():
            d1 = sum(q1)
            for q2, c2 in other.terms.items():
                if d1 + sum(q2) > cap:
                    continue
                q = tuple(a + b for a, b in zip(q1, q2))
                t[q] = t[q] + c1 * c2 if q in t else c1 * c2
        return NovikovElem(self.N, self.r, cap, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> GroupAlgElem:
        return self.terms.get((0,) * self.r, GroupAlgElem.zero(self.N))

    def inverse(self) -> "NovikovElem":
        """Geometric series; the Q^0 coefficient must be a unit of Z[P]."""
        u = self.constant_term()
        uinv = u.inverse()
        nil = self * uinv - 1
        out = NovikovElem.scalar(1, self.N, self.r, self.cap)
        power = NovikovElem.scalar(1, self.N, self.r, self.cap)
        for _ in range(self.cap):
            power = power * (-nil)
            out = out + power
        return out * uinv

    def __repr__(self):
        return f"NovikovElem({self.terms})"

    def to_json(self) -> dict:
        return {"terms": [{"qdeg": list(q), "weight": list(w), "coeff": c}
                          for q, g in sorted(self.terms.items()) for w, c in g]}


# ---------------------------------------------------------------- prime field


class Fp:
    """Element of Z/p for the randomized mode."""

    __slots__ = ("v",)
    p = PRIME

    def __init__(self, v: int):
        self.v = v % PRIME

    def __add__(self, o):
        return Fp(self.v + (o.v if isinstance(o, Fp) else o))

    __radd__ = __add__

    def __sub__(self, o):
        return Fp(self.v - (o.v if isinstance(o, Fp) else o))

    def __rsub__(self, o):
        return Fp(o - self.v)

    def __neg__(self):
        return Fp(-self.v)

    def __mul__(self, o):
        return Fp(self.v * (o.v if isinstance(o, Fp) else o))

    __rmul__ = __mul__

    def __eq__(self, o):
        return self.v == (o.v if isinstance(o, Fp) else o % PRIME)

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def is_zero(self) -> bool:
        return self.v == 0

    def __repr__(self):
        return f"Fp({self.v})"


def random_point(N: int, seed: int) -> list[int]:
    """Nonzero residues for e^{e_1}, ..., e^{e_{N-1}}."""
    rng = random.Random(seed)
    return [rng.randrange(1, PRIME) for _ in range(N - 1)]


def to_field(g: GroupAlgElem, point: Sequence[int]) -> Fp:
    return Fp(g.evaluate(point))
