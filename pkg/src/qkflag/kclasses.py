"""
Formal Z[P]-combinations of twisted semi-infinite Schubert classes
[O(w t_xi)](nu), together with the shift operators st_xi acting on them.

Keys are (w, xi, nu): a permutation, a coroot vector in simple-coroot
coordinates, and a canonical weight.  Line bundles are keys with w = e and
xi = 0.

>>> n = 2
>>> one = ShiftOp.identity(n)
>>> (one - ShiftOp.shift(weyl.simple_root(1).coroot(n))).terms
{(0, 0): 1, (1, 0): -1}
"""

from __future__ import annotations

from typing import Iterable, Mapping

from . import weyl
from .laurent import GroupAlgElem
from .weyl import Coroot, Permutation, Weight

Key = tuple[Permutation, Coroot, Weight]


class ShiftOp:
    """Integer combination of translation shifts st_xi."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Coroot, int] | None = None):
        self.n = n
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def identity(cls, n: int) -> "ShiftOp":
        return cls(n, {weyl.zero_coroot(n): 1})

    @classmethod
    def shift(cls, xi: Coroot) -> "ShiftOp":
        return cls(len(xi), {tuple(xi): 1})

    def __add__(self, other: "ShiftOp") -> "ShiftOp":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return ShiftOp(self.n, t)

    def __neg__(self):
        return ShiftOp(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ShiftOp(self.n, {k: v * other for k, v in self.terms.items()})
        t: dict[Coroot, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = weyl.coroot_add(k1, k2)
                t[k] = t.get(k, 0) + v1 * v2
        return ShiftOp(self.n, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ShiftOp) and self.terms == other.terms

    def __repr__(self):
        return f"ShiftOp({self.terms})"


def one_minus_shift(i: int, n: int) -> ShiftOp:
    """1 - st_{alpha_i^vee}."""
    return ShiftOp.identity(n) - ShiftOp.shift(weyl.simple_root(i).coroot(n))


class ShiftModuleElem:
    """Finite map (w, xi, nu) -> Z[P]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Key, GroupAlgElem] | None = None):
        self.n = n
        self.terms: dict[Key, GroupAlgElem] = {}
        for (w, xi, nu), c in (terms or {}).items():
            if isinstance(c, int):
                c = GroupAlgElem.constant(c, n + 1)
            if not c.is_zero():
                key = (weyl.Permutation(w), tuple(xi), weyl.canonical(nu))
                prev = self.terms.get(key)
                s = c if prev is None else prev + c
                if s.is_zero():
                    self.terms.pop(key, None)
                else:
                    self.terms[key] = s

    @classmethod
    def zero(cls, n: int) -> "ShiftModuleElem":
        return cls(n)

    @classmethod
    def schubert(cls, w: Permutation, xi: Coroot | None = None, nu: Weight | None = None,
                 coeff: GroupAlgElem | int = 1) -> "ShiftModuleElem":
        n = len(w) - 1
        xi = weyl.zero_coroot(n) if xi is None else tuple(xi)
        nu = weyl.zero_weight(n + 1) if nu is None else tuple(nu)
        return cls(n, {(w, xi, nu): coeff})

    @classmethod
    def line_bundle(cls, nu: Weight, n: int, coeff: GroupAlgElem | int = 1) -> "ShiftModuleElem":
        return cls.schubert(weyl.identity(n + 1), None, nu, coeff)

    def _combine(self, other: "ShiftModuleElem", sign: int) -> "ShiftModuleElem":
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t[k] + c * sign if k in t else c * sign
            if s.is_zero():
                t.pop(k, None)
            else:
                t[k] = s
        out = ShiftModuleElem(self.n)
        out.terms = t
        return out

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        out = ShiftModuleElem(self.n)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def scale(self, c: GroupAlgElem | int) -> "ShiftModuleElem":
        out = ShiftModuleElem(self.n)
        out.terms = {k: v * c for k, v in self.terms.items()}
        if isinstance(c, GroupAlgElem) and not c.is_unit():
            out.terms = {k: v for k, v in out.terms.items() if not v.is_zero()}
        if isinstance(c, int) and c == 0:
            out.terms = {}
        return out

    __rmul__ = scale

    def shift(self, xi: Coroot) -> "ShiftModuleElem":
        """st_xi on every term."""
        out = ShiftModuleElem(self.n)
        out.terms = {(w, weyl.coroot_add(z, xi), nu): c for (w, z, nu), c in self.terms.items()}
        return out

    def twist(self, mu: Weight) -> "ShiftModuleElem":
        """Tensor with the line bundle of weight mu."""
        out = ShiftModuleElem(self.n)
        out.terms = {(w, z, weyl.weight_add(nu, mu)): c for (w, z, nu), c in self.terms.items()}
        return out

    def apply(self, op: ShiftOp) -> "ShiftModuleElem":
        out = ShiftModuleElem(self.n)
        for xi, k in op.terms.items():
            out = out + self.shift(xi).scale(k)
        return out

    def truncate(self, cap: int | None) -> tuple["ShiftModuleElem", int]:
        """Drop terms whose translation degree exceeds cap; return (result, dropped)."""
        if cap is None:
            return self, 0
        out = ShiftModuleElem(self.n)
        out.terms = {k: c for k, c in self.terms.items() if sum(k[1]) <= cap}
        return out, len(self.terms) - len(out.terms)

    def map_coefficients(self, f) -> "ShiftModuleElem":
        out = ShiftModuleElem(self.n)
        for k, c in self.terms.items():
            v = f(c)
            if not v.is_zero():
                out.terms[k] = v
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ShiftModuleElem) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0].length(), tuple(kv[0][0]), kv[0][1], kv[0][2]))

    def coefficient_of_twist(self, nu: Weight) -> dict[tuple[Permutation, Coroot], GroupAlgElem]:
        nu = weyl.canonical(nu)
        return {(w, xi): c for (w, xi, mu), c in self.terms.items() if mu == nu}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})[{''.join(map(str, w))}, t{list(xi)}]({list(nu)})"
                          for (w, xi, nu), c in self.items())

    def to_json(self) -> dict:
        return {"terms": [{"w": list(w), "xi": list(xi), "twist": list(nu), "coeff": c.to_json()}
                          for (w, xi, nu), c in self.items()]}


def signed_terms(items: Iterable[tuple[int, Key]]) -> list[tuple[int, Key]]:
    """Canonical sorted multiset representation of signed unit terms."""
    return sorted(((s, (tuple(w), tuple(x), tuple(v))) for s, (w, x, v) in items))
