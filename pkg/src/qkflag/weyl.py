"""
Type A_n combinatorics: permutations of {1..n+1}, weights, roots, coroots,
Bruhat order, parabolic cosets and reflection orders.

Permutations are one-line tuples with 1-based values, acting on weights by
``w e_i = e_{w(i)}``.  Weights are integer vectors of length n+1 taken modulo
the all-ones vector; the canonical representative has last coordinate 0.

>>> w = Permutation((2, 3, 1))
>>> w.length()
2
>>> act(w, fundamental(1, 2))
(0, 1, 0)
>>> [r.label() for r in reflection_order((1, 2, 1), 2)]
['a_{1,1}', 'a_{1,2}', 'a_{2,2}']
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

Weight = tuple[int, ...]
Coroot = tuple[int, ...]


class ConventionError(ValueError):
    """Raised when an input violates a structural precondition."""


class Permutation(tuple):
    """A permutation of {1..N} in one-line notation."""

    def __new__(cls, images: Iterable[int]):
        t = tuple(int(a) for a in images)
        if sorted(t) != list(range(1, len(t) + 1)):
            raise ConventionError(f"not a permutation in one-line form: {t}")
        return super().__new__(cls, t)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Permutation":
        return super().__new__(cls, images)

    @property
    def size(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (uv)(i) = u(v(i))
        return Permutation._raw(tuple(self[b - 1] for b in other))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, a in enumerate(self, 1):
            inv[a - 1] = i
        return Permutation._raw(tuple(inv))

    def length(self) -> int:
        return _length(tuple(self))

    def right_simple(self, i: int) -> "Permutation":
        """w s_i: swap positions i, i+1."""
        t = list(self)
        t[i - 1], t[i] = t[i], t[i - 1]
        return Permutation._raw(tuple(t))

    def left_simple(self, i: int) -> "Permutation":
        """s_i w: swap values i, i+1."""
        return Permutation._raw(tuple(i + 1 if a == i else i if a == i + 1 else a for a in self))

    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self, 1))

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


@lru_cache(maxsize=None)
def _length(t: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(t)) for j in range(i + 1, len(t)) if t[i] > t[j])


def identity(N: int) -> Permutation:
    return Permutation._raw(tuple(range(1, N + 1)))


def simple(i: int, N: int) -> Permutation:
    return identity(N).right_simple(i)


def transposition(a: int, b: int, N: int) -> Permutation:
    t = list(range(1, N + 1))
    t[a - 1], t[b - 1] = b, a
    return Permutation._raw(tuple(t))


def longest(N: int) -> Permutation:
    return Permutation._raw(tuple(range(N, 0, -1)))


def from_word(word: Sequence[int], N: int) -> Permutation:
    """s_{i1} s_{i2} ... s_{ik}."""
    w = identity(N)
    for i in word:
        w = w.right_simple(i)
    return w


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word, peeling right descents from the left end of positions."""
    word: list[int] = []
    w = Permutation._raw(tuple(w))
    while True:
        for i in range(1, len(w)):
            if w[i - 1] > w[i]:
                word.append(i)
                w = w.right_simple(i)
                break
        else:
            break
    return tuple(reversed(word))


@lru_cache(maxsize=None)
def all_permutations(N: int) -> tuple[Permutation, ...]:
    """Every element of S_N, sorted by length then lexicographically."""
    return tuple(sorted((Permutation._raw(p) for p in permutations(range(1, N + 1))),
                        key=lambda p: (p.length(), tuple(p))))


# ---------------------------------------------------------------- weights


def canonical(c: Sequence[int]) -> Weight:
    last = c[-1]
    return tuple(int(x - last) for x in c)


def weight_add(*vs: Sequence[int]) -> Weight:
    return canonical([sum(t) for t in zip(*vs)])


def weight_neg(v: Sequence[int]) -> Weight:
    return canonical([-x for x in v])


def weight_scale(k: int, v: Sequence[int]) -> Weight:
    return canonical([k * x for x in v])


def epsilon(i: int, N: int) -> Weight:
    c = [0] * N
    c[i - 1] = 1
    return canonical(c)


def epsilon_sum(J: Iterable[int], N: int) -> Weight:
    c = [0] * N
    for j in J:
        c[j - 1] += 1
    return canonical(c)


def fundamental(k: int, n: int) -> Weight:
    """varpi_k = e_1 + ... + e_k in type A_n."""
    if not 1 <= k <= n:
        raise ConventionError(f"fundamental weight index {k} out of range for n={n}")
    return epsilon_sum(range(1, k + 1), n + 1)


def zero_weight(N: int) -> Weight:
    return (0,) * N


def act(w: Permutation, c: Sequence[int]) -> Weight:
    out = [0] * len(c)
    for i, a in enumerate(w):
        out[a - 1] = c[i]
    return canonical(out)


def is_dominant(c: Sequence[int]) -> bool:
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1))


# ---------------------------------------------------------------- roots


@dataclass(frozen=True, order=True)
class Root:
    """sign * (e_i - e_{j+1}) for 1 <= i <= j <= n."""
    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.i <= self.j or self.sign not in (1, -1):
            raise ConventionError(f"bad root {self}")

    @classmethod
    def from_ends(cls, a: int, b: int) -> "Root":
        """The root e_a - e_b."""
        if a == b:
            raise ConventionError("e_a - e_a is not a root")
        return cls(a, b - 1, 1) if a < b else cls(b, a - 1, -1)

    @property
    def ends(self) -> tuple[int, int]:
        return (self.i, self.j + 1) if self.sign > 0 else (self.j + 1, self.i)

    @property
    def positive(self) -> bool:
        return self.sign > 0

    def __neg__(self) -> "Root":
        return Root(self.i, self.j, -self.sign)

    def abs(self) -> "Root":
        return Root(self.i, self.j, 1)

    def height(self) -> int:
        return self.sign * (self.j - self.i + 1)

    def is_simple(self) -> bool:
        return self.sign > 0 and self.i == self.j

    def reflection(self, N: int) -> Permutation:
        a, b = self.ends
        return transposition(a, b, N)

    def weight(self, N: int) -> Weight:
        a, b = self.ends
        c = [0] * N
        c[a - 1] += 1
        c[b - 1] -= 1
        return canonical(c)

    def coroot(self, n: int) -> Coroot:
        """Coordinates in the simple coroot basis."""
        v = [0] * n
        for k in range(self.i, self.j + 1):
            v[k - 1] = self.sign
        return tuple(v)

    def label(self) -> str:
        s = "" if self.sign > 0 else "-"
        return f"{s}a_{{{self.i},{self.j}}}"

    def __repr__(self) -> str:
        return self.label()


def simple_root(i: int) -> Root:
    return Root(i, i)


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Root, ...]:
    return tuple(Root(i, j) for i in range(1, n + 1) for j in range(i, n + 1))


def act_root(w: Permutation, r: Root) -> Root:
    a, b = r.ends
    return Root.from_ends(w(a), w(b))


def pairing(c: Sequence[int], r: Root) -> int:
    """<nu, alpha^vee>."""
    a, b = r.ends
    return c[a - 1] - c[b - 1]


def pair_coroot(c: Sequence[int], xi: Sequence[int]) -> int:
    """<nu, xi> for xi in simple-coroot coordinates."""
    return sum(k * (c[i] - c[i + 1]) for i, k in enumerate(xi))


def coroot_add(*vs: Sequence[int]) -> Coroot:
    return tuple(sum(t) for t in zip(*vs))


def coroot_scale(k: int, v: Sequence[int]) -> Coroot:
    return tuple(k * x for x in v)


def coroot_neg(v: Sequence[int]) -> Coroot:
    return tuple(-x for x in v)


def zero_coroot(n: int) -> Coroot:
    return (0,) * n


def coroot_to_weight(xi: Sequence[int]) -> Weight:
    """In type A roots and coroots share coordinates; map sum k_i alpha_i^vee to sum k_i alpha_i."""
    N = len(xi) + 1
    c = [0] * N
    for i, k in enumerate(xi):
        c[i] += k
        c[i + 1] -= k
    return canonical(c)


def weight_to_coroot(c: Sequence[int]) -> Coroot:
    """Inverse of coroot_to_weight on the root lattice."""
    if sum(c) % len(c) != 0:
        raise ConventionError(f"{tuple(c)} is not in the root lattice")
    shift = sum(c) // len(c)
    d = [x - shift for x in c]
    out, acc = [], 0
    for x in d[:-1]:
        acc += x
        out.append(acc)
    return tuple(out)


def act_coroot(w: Permutation, xi: Sequence[int]) -> Coroot:
    return weight_to_coroot(act(w, coroot_to_weight(xi)))


@lru_cache(maxsize=None)
def two_rho_J(n: int, J: frozenset[int]) -> Weight:
    """Sum of the positive roots of the Levi of J."""
    c = [0] * (n + 1)
    for s in levi_roots(n, J):
        a, b = s.ends
        c[a - 1] += 1
        c[b - 1] -= 1
    return tuple(c)


def quantum_drop(r: Root, n: int, J: frozenset[int]) -> int:
    """2<rho - rho_J, alpha^vee>, the length deficit of a quantum edge."""
    return 2 * r.height() - pairing(two_rho_J(n, J), r)


def is_in_levi(r: Root, J: frozenset[int] | set[int]) -> bool:
    return all(k in J for k in range(r.i, r.j + 1))


def levi_roots(n: int, J: Iterable[int]) -> tuple[Root, ...]:
    J = frozenset(J)
    return tuple(r for r in positive_roots(n) if is_in_levi(r, J))


# ---------------------------------------------------------------- Bruhat order


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Tableau criterion: v <= w iff every rank matrix entry of v is dominated by w."""
    N = len(v)
    for i in range(1, N):
        sv = sorted(v[:i], reverse=True)
        sw = sorted(w[:i], reverse=True)
        if any(a > b for a, b in zip(sv, sw)):
            return False
    return True


def bruhat_lt(v: Permutation, w: Permutation) -> bool:
    return v != w and bruhat_leq(v, w)


# ---------------------------------------------------------------- parabolic


def _blocks(J: frozenset[int], N: int) -> list[tuple[int, int]]:
    """Position intervals fused by s_j, j in J (0-based, half open)."""
    out, start = [], 0
    for p in range(1, N):
        if p not in J:
            out.append((start, p))
            start = p
    out.append((start, N))
    return out


def min_coset_rep(w: Permutation, J: Iterable[int]) -> Permutation:
    """The minimal-length element of w W_J."""
    J = frozenset(J)
    t = list(w)
    for a, b in _blocks(J, len(w)):
        t[a:b] = sorted(t[a:b])
    return Permutation._raw(tuple(t))


def max_coset_rep(w: Permutation, J: Iterable[int]) -> Permutation:
    J = frozenset(J)
    t = list(w)
    for a, b in _blocks(J, len(w)):
        t[a:b] = sorted(t[a:b], reverse=True)
    return Permutation._raw(tuple(t))


def in_min_reps(w: Permutation, J: Iterable[int]) -> bool:
    return min_coset_rep(w, J) == w


@lru_cache(maxsize=None)
def min_reps(n: int, J: frozenset[int]) -> tuple[Permutation, ...]:
    return tuple(w for w in all_permutations(n + 1) if in_min_reps(w, J))


@lru_cache(maxsize=None)
def parabolic_subgroup(n: int, J: frozenset[int]) -> tuple[Permutation, ...]:
    """W_J: permutations preserving every block of positions."""
    blocks = _blocks(J, n + 1)
    return tuple(w for w in all_permutations(n + 1)
                 if all(a < w[p] <= b for a, b in blocks for p in range(a, b)))


def coset(w: Permutation, J: frozenset[int]) -> tuple[Permutation, ...]:
    return tuple(w * u for u in parabolic_subgroup(len(w) - 1, frozenset(J)))


def longest_parabolic(n: int, J: Iterable[int]) -> Permutation:
    return max_coset_rep(identity(n + 1), J)


def complement(n: int, K: Iterable[int]) -> frozenset[int]:
    return frozenset(range(1, n + 1)) - frozenset(K)


def longest_after_J(n: int, k: int) -> int:
    """w0(k) = n + 2 - k, the image of k under the longest element."""
    return n + 2 - k


# ---------------------------------------------------------------- reflection orders


def reflection_order(word: Sequence[int], n: int) -> tuple[Root, ...]:
    """beta_k = s_{i1}...s_{i(k-1)} alpha_{ik} for a reduced word of w0."""
    N = n + 1
    total = n * (n + 1) // 2
    word = tuple(word)
    if len(word) != total or from_word(word, N) != longest(N):
        raise ConventionError(f"{word} is not a reduced word of the longest element")
    out, prefix = [], identity(N)
    for i in word:
        out.append(act_root(prefix, simple_root(i)))
        prefix = prefix.right_simple(i)
    return tuple(out)


def is_convex_order(order: Sequence[Root], n: int) -> bool:
    """Every sum of two positive roots sits strictly between them."""
    pos = {r: k for k, r in enumerate(order)}
    if set(pos) != set(positive_roots(n)):
        return False
    for a, b in combinations(order, 2):
        if a.j + 1 == b.i or b.j + 1 == a.i:
            s = Root(min(a.i, b.i), max(a.j, b.j))
            lo, hi = sorted((pos[a], pos[b]))
            if not lo < pos[s] < hi:
                return False
    return True


def _concat_reduced(*parts: Permutation) -> tuple[int, ...]:
    word: list[int] = []
    for p in parts:
        word.extend(reduced_word(p))
    return tuple(word)


def levi_first_order(n: int, J: Iterable[int]) -> tuple[Root, ...]:
    """A reflection order listing the roots of the Levi of J first."""
    J = frozenset(J)
    N = n + 1
    wJ = longest_parabolic(n, J)
    rest = wJ.inverse() * longest(N)
    order = reflection_order(_concat_reduced(wJ, rest), n)
    m = len(levi_roots(n, J))
    if set(order[:m]) != set(levi_roots(n, J)):
        raise ConventionError("construction of a Levi-first order failed")
    return order


def three_block_order(n: int, K: Iterable[int]) -> tuple[Root, ...]:
    """Order with Levi(J) first, Levi(K) last and the rest between, J = I minus K."""
    K = frozenset(K)
    J = complement(n, K)
    N = n + 1
    Kstar = frozenset(n + 1 - k for k in K)
    wJ = longest_parabolic(n, J)
    wKs = longest_parabolic(n, Kstar)
    middle = wJ.inverse() * longest(N) * wKs.inverse()
    if wJ.length() + middle.length() + wKs.length() != longest(N).length():
        raise ConventionError("no length-additive factorisation")
    order = reflection_order(_concat_reduced(wJ, middle, wKs), n)
    a, b = len(levi_roots(n, J)), len(levi_roots(n, K))
    if set(order[:a]) != set(levi_roots(n, J)) or set(order[len(order) - b:]) != set(levi_roots(n, K)):
        raise ConventionError("three-block order construction failed")
    return order


def all_reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """Every reduced word of w (exponential; for small cases)."""
    if w.is_identity():
        return [()]
    out = []
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            for u in all_reduced_words(w.right_simple(i)):
                out.append(u + (i,))
    return out
