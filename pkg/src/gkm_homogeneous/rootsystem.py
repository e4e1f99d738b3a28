"""Root systems of simple Lie algebras in simple-root coordinates.

Every root is an integer vector of coefficients with respect to the simple
roots ``alpha_1 .. alpha_n``.  The invariant inner product is the symmetrized
Cartan matrix, scaled so that short roots have squared length 2 (long roots
then have squared length 4 or 6).

Numbering follows Bourbaki for types A, D, E, F and G.  For types B and C the
chain is read from the other end: ``alpha_1`` is the distinguished simple root
(short for B, long for C).  In rank 2 this gives the usual B2 picture with
short roots ``alpha_1, alpha_1 + alpha_2`` and long roots
``alpha_2, 2 alpha_1 + alpha_2``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

Root = tuple[int, ...]
Vector = tuple[Fraction, ...]
# An element xi of t, identified with t* through the invariant form:
# beta(xi) := (beta, xi).
Covector = tuple[Fraction, ...]

FAMILIES = "ABCDEFG"

# Number of roots per type, used as a consistency check.
_ROOT_COUNTS = {
    "A": lambda n: n * n + n,
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * n - 2 * n,
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


class SubsystemClosureWarning(UserWarning):
    """The generators given for K were not additively closed."""


@dataclass(frozen=True, order=True)
class CartanDatum:
    family: str
    rank: int

    def __post_init__(self):
        ok = {
            "A": self.rank >= 1,
            "B": self.rank >= 2,
            "C": self.rank >= 2,
            "D": self.rank >= 3,
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }
        if self.family not in ok:
            raise ValueError(f"unknown Cartan family {self.family!r}")
        if not ok[self.family]:
            raise ValueError(f"rank {self.rank} is not admissible for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> CartanDatum:
        """Parse strings such as ``"A2"``, ``"g2"`` or ``"E6"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if m is None:
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _simple_gram(datum: CartanDatum) -> list[list[int]]:
    n, fam = datum.rank, datum.family
    g = [[0] * n for _ in range(n)]

    def link(i, j, value):
        g[i][j] = g[j][i] = value

    if fam == "A":
        lengths = [2] * n
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif fam == "B":
        lengths = [2] + [4] * (n - 1)
        for i in range(n - 1):
            link(i, i + 1, -2)
    elif fam == "C":
        lengths = [4] + [2] * (n - 1)
        link(0, 1, -2)
        for i in range(1, n - 1):
            link(i, i + 1, -1)
    elif fam == "D":
        lengths = [2] * n
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif fam == "E":
        lengths = [2] * n
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif fam == "F":
        lengths = [4, 4, 2, 2]
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif fam == "G":
        lengths = [2, 6]
        link(0, 1, -3)
    else:  # pragma: no cover - CartanDatum validates the family
        raise ValueError(fam)
    for i in range(n):
        g[i][i] = lengths[i]
    return g


def _add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def _scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def neg(v: Sequence) -> tuple:
    return tuple(-a for a in v)


@dataclass(frozen=True)
class Subsystem:
    """A symmetric, additively closed set of roots (the roots of K)."""

    roots: tuple[Root, ...]

    def __contains__(self, item):
        return tuple(item) in self._set

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    @cached_property
    def _set(self) -> frozenset[Root]:
        return frozenset(self.roots)


@dataclass(frozen=True)
class RootSystem:
    datum: CartanDatum
    gram: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.datum.rank

    @cached_property
    def simples(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots, sorted lexicographically by coefficient vector."""
        found = set(self.simples)
        frontier = list(self.simples)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    r = self.simple_reflect(i, v)
                    if r not in found:
                        found.add(r)
                        nxt.append(r)
            frontier = nxt
        return tuple(sorted(found))

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if is_positive(r))

    @cached_property
    def rho(self) -> Vector:
        """Half the sum of the positive roots."""
        total = [0] * self.rank
        for r in self.positive_roots:
            total = _add(total, r)
        return tuple(Fraction(c, 2) for c in total)

    def inner(self, u: Sequence, v: Sequence):
        g = self.gram
        n = self.rank
        return sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])

    def norm2(self, v: Sequence):
        return self.inner(v, v)

    def cartan_int(self, gamma: Sequence, beta: Sequence) -> int:
        """The integer ``2 (gamma, beta) / (beta, beta)``."""
        num, den = 2 * self.inner(gamma, beta), self.norm2(beta)
        if den == 0:
            raise ValueError("beta must be nonzero")
        q = Fraction(num) / Fraction(den)
        if q.denominator != 1:
            raise ArithmeticError(f"non-integral Cartan integer {q} for {gamma}, {beta}")
        return int(q)

    def simple_reflect(self, i: int, v: Root) -> Root:
        g = self.gram
        pairing = sum(g[i][j] * v[j] for j in range(self.rank))
        c = 2 * pairing // g[i][i]
        return tuple(a - c * (k == i) for k, a in enumerate(v))

    def reflect(self, beta: Sequence, v: Sequence) -> tuple:
        """Reflect ``v`` in the hyperplane orthogonal to ``beta``.

        Exact for integer or Fraction entries; integer input that pairs
        integrally with ``beta`` (every root does) stays integer.
        """
        num, den = 2 * self.inner(v, beta), self.norm2(beta)
        c = Fraction(num) / Fraction(den)
        if c.denominator == 1:
            c = int(c)
        return tuple(a - c * b for a, b in zip(v, beta))

    def is_root(self, v: Sequence) -> bool:
        return tuple(v) in self.root_set

    def long_roots(self) -> tuple[Root, ...]:
        top = max(self.norm2(r) for r in self.roots)
        return tuple(r for r in self.roots if self.norm2(r) == top)

    def short_roots(self) -> tuple[Root, ...]:
        bottom = min(self.norm2(r) for r in self.roots)
        return tuple(r for r in self.roots if self.norm2(r) == bottom)

    def close_subsystem(self, generators: Iterable[Sequence[int]]) -> Subsystem:
        """Smallest symmetric, additively closed set of roots containing ``generators``."""
        current = set()
        for g in generators:
            g = tuple(g)
            if g not in self.root_set:
                raise ValueError(f"{g} is not a root of {self.datum}")
            current.add(g)
            current.add(neg(g))
        changed = True
        while changed:
            changed = False
            for a, b in combinations_with_replacement(sorted(current), 2):
                s = _add(a, b)
                if s in self.root_set and s not in current:
                    current.add(s)
                    current.add(neg(s))
                    changed = True
        return Subsystem(tuple(sorted(current)))

    def is_additively_closed(self, roots: Iterable[Sequence[int]]) -> bool:
        """gamma, delta in the set and gamma + delta a root imply gamma + delta in the set."""
        s = {tuple(r) for r in roots}
        return all(_add(a, b) not in self.root_set or _add(a, b) in s for a in s for b in s)

    def is_closed(self, roots: Iterable[Sequence[int]]) -> bool:
        """Symmetric and additively closed, i.e. the roots of a subgroup K."""
        s = {tuple(r) for r in roots}
        return all(neg(r) in s for r in s) and self.is_additively_closed(s)

    def resolve_subsystem(self, generators: Iterable[Sequence[int]]) -> Subsystem:
        """Close ``generators``, warning if the closure is strictly larger."""
        gens = {tuple(g) for g in generators}
        sub = self.close_subsystem(gens)
        symmetric = gens | {neg(g) for g in gens}
        if len(sub) > len(symmetric):
            added = sorted(set(sub.roots) - symmetric)
            warnings.warn(
                f"generators of K are not closed in {self.datum}; closure adds "
                f"{len(added)} roots: {[list(r) for r in added]}",
                SubsystemClosureWarning,
                stacklevel=2,
            )
        return sub

    def parabolic(self, simple_indices: Iterable[int]) -> Subsystem:
        """Subsystem generated by the given simple roots (1-based indices)."""
        gens = []
        for i in simple_indices:
            if not 1 <= i <= self.rank:
                raise ValueError(f"simple root index {i} out of range 1..{self.rank}")
            gens.append(self.simples[i - 1])
        return self.close_subsystem(gens)

    def pairing(self, beta: Sequence, xi: Covector) -> Fraction:
        return self.inner(beta, xi)

    def is_regular(self, xi: Covector) -> bool:
        return all(self.inner(b, xi) != 0 for b in self.positive_roots)


def is_positive(root: Sequence) -> bool:
    return any(c > 0 for c in root)


def root_class(root: Sequence[int]) -> Root:
    """Canonical member of ``{root, -root}``: the lexicographically larger one."""
    r = tuple(root)
    return max(r, neg(r))


def build_root_system(datum: CartanDatum | str) -> RootSystem:
    if isinstance(datum, str):
        datum = CartanDatum.parse(datum)
    gram = tuple(tuple(row) for row in _simple_gram(datum))
    R = RootSystem(datum, gram)
    expected = _ROOT_COUNTS[datum.family](datum.rank)
    if len(R.roots) != expected:  # pragma: no cover - guards the tables above
        raise AssertionError(f"{datum}: got {len(R.roots)} roots, expected {expected}")
    return R


def as_covector(coords: Iterable) -> Covector:
    return tuple(Fraction(c) for c in coords)
