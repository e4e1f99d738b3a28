"""Invariant almost complex structures as W_K-equivariant sign choices.

A section picks one root out of every class ``{gamma, -gamma}`` in
Delta_{G,K}, compatibly with the action of W_K.  It induces an axial
function on the oriented edges of the GKM graph: the edge leaving ``[w]`` in
direction ``[gamma]`` is labelled ``w s([w^-1 gamma])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterator

from .gkmgraph import GKMGraph, OrientedEdge
from .rootsystem import Root, neg, root_class


@dataclass(frozen=True)
class Section:
    """Choice of sign per class of Delta_{G,K}, stored as sorted (class, root) pairs."""

    choice: tuple[tuple[Root, Root], ...]
    orbit_reps: tuple[Root, ...] = field(default=(), compare=False)
    signs: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def from_roots(cls, roots) -> Section:
        """Section whose image is exactly ``roots`` (one root per class)."""
        pairs = {}
        for r in roots:
            r = tuple(r)
            c = root_class(r)
            if c in pairs:
                raise ValueError(f"two roots chosen for the class {c}")
            pairs[c] = r
        return cls(tuple(sorted(pairs.items())))

    def __getitem__(self, cls: Root) -> Root:
        return self._map[cls]

    def __contains__(self, cls: Root) -> bool:
        return cls in self._map

    def __len__(self):
        return len(self.choice)

    @cached_property
    def _map(self) -> dict[Root, Root]:
        return dict(self.choice)

    @property
    def delta0(self) -> tuple[Root, ...]:
        return tuple(sorted(r for _, r in self.choice))

    def negated(self) -> Section:
        return Section(tuple((c, neg(r)) for c, r in self.choice), self.orbit_reps,
                       tuple(-s for s in self.signs))

    def is_equivariant(self, g: GKMGraph) -> bool:
        for u in g.weyl_k.generators:
            for c, r in self.choice:
                image = u.apply(r)
                if self._map.get(root_class(image)) != image:
                    return False
        return True


def check_acs_condition(g: GKMGraph) -> bool:
    """No element of W_K sends a root of Delta_{G,K} to its negative."""
    for u in g.weyl_k:
        for a in g.delta_gk:
            if u.apply(a) == neg(a):
                return False
    return True


def class_orbits(g: GKMGraph) -> list[tuple[Root, ...]]:
    """W_K-orbits on Delta_{G,K}/±1, each sorted, ordered by their first class."""
    remaining = sorted({root_class(a) for a in g.delta_gk})
    orbits = []
    seen = set()
    for c in remaining:
        if c in seen:
            continue
        orb = sorted({root_class(u.apply(c)) for u in g.weyl_k})
        seen.update(orb)
        orbits.append(tuple(orb))
    return orbits


def _propagate(g: GKMGraph, base: Root) -> dict[Root, Root] | None:
    assigned: dict[Root, Root] = {}
    for u in g.weyl_k:
        image = u.apply(base)
        c = root_class(image)
        prev = assigned.setdefault(c, image)
        if prev != image:
            return None  # some u negates a root of this orbit
    return assigned


def enumerate_sections(g: GKMGraph) -> list[Section]:
    """All W_K-equivariant sections, built orbit by orbit.

    Sign vectors are in ``itertools.product`` order over the orbits, ``+1``
    meaning the canonical class representative of the orbit is chosen.
    """
    orbits = class_orbits(g)
    per_orbit = []
    for orb in orbits:
        base = orb[0]
        options = []
        for sign in (1, -1):
            got = _propagate(g, base if sign == 1 else neg(base))
            if got is not None:
                options.append((sign, got))
        if not options:
            return []
        per_orbit.append(options)
    reps = tuple(orb[0] for orb in orbits)
    out = []
    for combo in product(*per_orbit):
        merged: dict[Root, Root] = {}
        for _, assigned in combo:
            merged.update(assigned)
        out.append(Section(tuple(sorted(merged.items())), reps, tuple(s for s, _ in combo)))
    return out


class AxialFunction:
    """The edge labelling induced by a section; evaluated on demand."""

    def __init__(self, graph: GKMGraph, section: Section):
        self.graph = graph
        self.section = section
        self._cache: dict[OrientedEdge, Root] = {}

    def value(self, e: OrientedEdge) -> Root:
        hit = self._cache.get(e)
        if hit is not None:
            return hit
        g = self.graph
        w = g.rep(e.source)
        c = root_class(g.rep_inverse(e.source).apply(e.direction))
        if c not in self.section:
            raise ValueError(f"direction {e.direction} at vertex {e.source} is not a graph edge")
        hit = self._cache[e] = w.apply(self.section[c])
        return hit

    def values_at(self, v: int) -> list[Root]:
        return [self.value(e) for e in self.graph.out_edges(v)]

    def __call__(self, e: OrientedEdge) -> Root:
        return self.value(e)


def axial_value(a: AxialFunction, e: OrientedEdge) -> Root:
    return a.value(e)


@dataclass(frozen=True)
class Violation:
    axiom: int
    vertex: int
    edges: tuple[OrientedEdge, ...]
    detail: str = ""


@dataclass
class AxialReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def passed(self, axiom: int) -> bool:
        return all(v.axiom != axiom for v in self.violations)

    @property
    def first_violation(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "independence": self.passed(1),
            "antisymmetry": self.passed(2),
            "connection": self.passed(3),
        }


def _independent(u, v) -> bool:
    return any(u[i] * v[j] - u[j] * v[i] != 0 for i, j in combinations(range(len(u)), 2))


def iter_violations(a: AxialFunction) -> Iterator[Violation]:
    g = a.graph
    R = g.root_system
    for v in g.vertices:
        out = g.out_edges(v)
        vals = {e: a.value(e) for e in out}
        for e1, e2 in combinations(out, 2):
            if not _independent(vals[e1], vals[e2]):
                yield Violation(1, v, (e1, e2), "values are linearly dependent")
        for e in out:
            if a.value(g.reverse(e)) != neg(vals[e]):
                yield Violation(2, v, (e,), "reverse edge is not labelled by the negative")
        for e in out:
            ae = vals[e]
            for ep in out:
                lhs = tuple(x - y for x, y in zip(a.value(g.connection(e, ep)), vals[ep]))
                k = R.cartan_int(vals[ep], ae)
                if lhs != tuple(-k * x for x in ae):
                    yield Violation(3, v, (e, ep), "connection identity fails")


def verify_axial(a: AxialFunction) -> AxialReport:
    """Check independence, antisymmetry and the exact connection identity.

    The connection identity checked is
    ``a(theta_e(e')) - a(e') == -<a(e'), a(e)> a(e)``.
    """
    return AxialReport(list(iter_violations(a)))
