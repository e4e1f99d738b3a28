"""Borel and GKM models of the equivariant cohomology of G/K.

The Weyl group acts on S(t*) by the algebra automorphism extending its
action on linear forms: ``w . x_i = w alpha_i``.  This makes the action
covariant, ``(v w) . f = v . (w . f)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gkmgraph import GKMGraph
from .polynomial import Polynomial, linear_form
from .rootsystem import RootSystem
from .weyl import WeylElement, WeylGroup


class NotInvariantError(ValueError):
    """f1 passed to the Borel map is not W_K-invariant."""


def weyl_act_poly(w: WeylElement, f: Polynomial) -> Polynomial:
    n = f.nvars
    images = [Polynomial.linear([w.matrix[j][i] for j in range(n)]) for i in range(n)]
    return f.substitute(images)


def symmetrize(f: Polynomial, W: WeylGroup) -> Polynomial:
    """Average of ``w . f`` over the group (the Reynolds operator)."""
    total = Polynomial.zero(f.nvars)
    for w in W:
        total = total + weyl_act_poly(w, f)
    return total * Fraction(1, len(W))


def is_invariant(f: Polynomial, W: WeylGroup) -> bool:
    """Invariance under the generators of ``W``."""
    return all(weyl_act_poly(s, f) == f for s in W.generators)


def invariant_quadratic(R: RootSystem) -> Polynomial:
    """``sum of beta^2`` over the positive roots; a W_G-invariant quadratic."""
    q = Polynomial.zero(R.rank)
    for b in R.positive_roots:
        q = q + linear_form(b) ** 2
    return q


def divisible_by_linear(f: Polynomial, lam: Sequence) -> Polynomial | None:
    return f.divide_linear(list(lam))


@dataclass(frozen=True)
class GKMClass:
    """A polynomial per vertex of the GKM graph, indexed like ``graph.vertices``."""

    values: tuple[Polynomial, ...]

    def __getitem__(self, v: int) -> Polynomial:
        return self.values[v]

    def __len__(self):
        return len(self.values)

    def __mul__(self, other: GKMClass) -> GKMClass:
        if len(other) != len(self):
            raise ValueError("classes live on different graphs")
        return GKMClass(tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: GKMClass) -> GKMClass:
        if len(other) != len(self):
            raise ValueError("classes live on different graphs")
        return GKMClass(tuple(a + b for a, b in zip(self.values, other.values)))


def constant_class(f: Polynomial, g: GKMGraph) -> GKMClass:
    return GKMClass(tuple(f for _ in g.vertices))


def gkm_membership(c: GKMClass, g: GKMGraph) -> bool:
    """Edge differences must be divisible by the edge's root."""
    if len(c) != len(g):
        raise ValueError(f"class has {len(c)} values but the graph has {len(g)} vertices")
    for e, r in g.edges():
        diff = c[r.source] - c[e.source]
        if diff and divisible_by_linear(diff, e.direction) is None:
            return False
    return True


def borel_map(f1: Polynomial, f2: Polynomial, g: GKMGraph) -> GKMClass:
    """The class ``[w] -> (w . f1) f2`` attached to ``f1 (x) f2``."""
    if not is_invariant(f1, g.weyl_k):
        raise NotInvariantError("f1 must be invariant under W_K")
    values = tuple(weyl_act_poly(g.rep(v), f1) * f2 for v in g.vertices)
    if __debug__:
        W = g.weyl
        for v in g.vertices:
            for u in g.weyl_k.generators:
                other = W.mul(g.rep(v), u)
                assert weyl_act_poly(other, f1) * f2 == values[v], "representative dependence"
    return GKMClass(values)


def weyl_act_class(w: WeylElement, c: GKMClass, g: GKMGraph) -> GKMClass:
    """``(w c)(p) = w . c(w^-1 p)``."""
    winv = g.weyl.inverse(w)
    return GKMClass(tuple(weyl_act_poly(w, c[g.act_vertex(winv, v)]) for v in g.vertices))
