"""Orientations, indices, combinatorial Betti numbers and Morse functions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from math import lcm
from typing import Iterable, Sequence

from .axial import AxialFunction, Section
from .gkmgraph import GKMGraph, OrientedEdge
from .rootsystem import Covector, RootSystem, Subsystem, as_covector
from .weyl import WeylGroup

BettiVector = tuple[int, ...]


class IrregularCovectorError(ValueError):
    pass


class Orientation:
    """Edges point up when their axial value pairs positively with ``xi``."""

    def __init__(self, axial: AxialFunction, xi: Sequence):
        R = axial.graph.root_system
        xi = as_covector(xi)
        if not R.is_regular(xi):
            raise IrregularCovectorError(f"xi = {[str(c) for c in xi]} is not regular")
        self.axial = axial
        self.xi = xi
        # (beta, xi) = beta . (G xi); clearing denominators keeps every sign
        h = [sum(row[j] * xi[j] for j in range(R.rank)) for row in R.gram]
        scale = lcm(*(c.denominator for c in h))
        self._weights = tuple(int(c * scale) for c in h)
        self._sign: dict[OrientedEdge, int] = {}

    @property
    def graph(self) -> GKMGraph:
        return self.axial.graph

    def pairing(self, e: OrientedEdge) -> Fraction:
        return self.graph.root_system.inner(self.axial.value(e), self.xi)

    def up(self, e: OrientedEdge) -> bool:
        s = self._sign.get(e)
        if s is None:
            v = self.axial.value(e)
            s = 1 if sum(a * b for a, b in zip(v, self._weights)) > 0 else -1
            self._sign[e] = s
        return s > 0

    def up_edges(self) -> list[tuple[int, int]]:
        g = self.graph
        return [(e.source, g.target(e)) for e in g.oriented_edges() if self.up(e)]


@dataclass(frozen=True)
class MorseAssignment:
    values: tuple

    def __getitem__(self, v: int):
        return self.values[v]

    def is_morse_for(self, o: Orientation) -> bool:
        return all(self.values[t] > self.values[s] for s, t in o.up_edges())


def index(o: Orientation, v: int) -> int:
    """Number of edges at ``v`` that point downward."""
    return sum(1 for e in o.graph.out_edges(v) if not o.up(e))


def betti(o: Orientation) -> BettiVector:
    counts = [0] * (o.graph.degree + 1)
    for v in o.graph.vertices:
        counts[index(o, v)] += 1
    return tuple(counts)


def betti_invariance(a: AxialFunction, xis: Iterable[Sequence]) -> bool:
    xis = [as_covector(x) for x in xis]
    R = a.graph.root_system
    bad = [i for i, x in enumerate(xis) if not R.is_regular(x)]
    if bad:
        raise IrregularCovectorError(f"irregular xi at positions {bad}")
    vectors = {betti(Orientation(a, x)) for x in xis}
    return len(vectors) <= 1


def _sorter(o: Orientation) -> TopologicalSorter:
    preds: dict[int, set[int]] = {v: set() for v in o.graph.vertices}
    for s, t in o.up_edges():
        preds[t].add(s)
    return TopologicalSorter(preds)


def upward_cycle(o: Orientation) -> list[int] | None:
    """A directed cycle of upward edges ``[v0, v1, ..., v0]``, or None if acyclic."""
    try:
        tuple(_sorter(o).static_order())
    except CycleError as exc:
        cycle = list(exc.args[1])
        up = set(o.up_edges())
        if not all((a, b) in up for a, b in zip(cycle, cycle[1:])):
            cycle.reverse()
        return cycle
    return None


def find_morse(o: Orientation) -> MorseAssignment | None:
    """Longest-path depth in the upward graph, or None if it has a cycle."""
    try:
        order = tuple(_sorter(o).static_order())
    except CycleError:
        return None
    preds: dict[int, list[int]] = {v: [] for v in o.graph.vertices}
    for s, t in o.up_edges():
        preds[t].append(s)
    depth: dict[int, int] = {}
    for v in order:
        depth[v] = max((depth[p] + 1 for p in preds[v]), default=0)
    return MorseAssignment(tuple(depth[v] for v in o.graph.vertices))


def chamber_representatives(R: RootSystem, W: WeylGroup) -> list[Covector]:
    """One interior point ``w rho`` per Weyl chamber, in the group's canonical order."""
    return [as_covector(w.apply(R.rho)) for w in W]


def random_regular_covectors(R: RootSystem, count: int, seed: int) -> list[Covector]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        xi = tuple(Fraction(rng.randint(-60, 60), rng.randint(1, 12)) for _ in range(R.rank))
        if R.is_regular(xi):
            out.append(xi)
    return out


def integrable_chamber(a: AxialFunction) -> Covector | None:
    """First chamber representative whose orientation is acyclic."""
    g = a.graph
    for xi in chamber_representatives(g.root_system, g.weyl):
        if find_morse(Orientation(a, xi)) is not None:
            return xi
    return None


def is_integrable(a: AxialFunction) -> bool:
    return integrable_chamber(a) is not None


def closure_oracle(section: Section, delta_k: Subsystem, R: RootSystem) -> bool:
    """Is Delta_K together with the image of the section additively closed?"""
    return R.is_additively_closed(list(delta_k.roots) + list(section.delta0))


def geometric_morse(a: AxialFunction, xi: Sequence) -> MorseAssignment | None:
    """The height function ``[w] -> (mu - w mu, xi)`` with mu the sum of the section's roots.

    Returns None when the section does not pass the closure oracle.
    """
    g = a.graph
    R = g.root_system
    if not closure_oracle(a.section, g.delta_k, R):
        return None
    o = Orientation(a, xi)
    mu = [0] * R.rank
    for b in a.section.delta0:
        mu = [x + y for x, y in zip(mu, b)]
    mu = tuple(mu)
    values = tuple(
        R.inner(tuple(x - y for x, y in zip(mu, g.rep(v).apply(mu))), o.xi) for v in g.vertices
    )
    result = MorseAssignment(values)
    if not result.is_morse_for(o):
        raise ValueError("xi is not compatible with the height function of this section")
    return result
