"""The GKM graph of G/K.

Vertices are the cosets W_G/W_K.  At the vertex with canonical
representative ``w`` the edges are indexed by the root classes
``[w beta]``, beta in Delta_{G,K}; the edge in direction ``[gamma]`` ends at
the coset of ``sigma_gamma w``.  An oriented edge is the pair
(source, direction class), which also tells parallel edges apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootsystem import Root, RootSystem, Subsystem, root_class
from .weyl import CosetSpace, WeylElement, WeylGroup, cosets, generate_weyl, subgroup_from


@dataclass(frozen=True, order=True)
class OrientedEdge:
    source: int
    direction: Root


class GKMGraph:
    def __init__(self, R: RootSystem, delta_k: Subsystem, W: WeylGroup | None = None):
        if not R.is_closed(delta_k.roots):
            raise ValueError("delta_k must be a closed subsystem (apply close_subsystem first)")
        if len(delta_k) == len(R.roots):
            raise ValueError("K = G: the homogeneous space is a point")
        self.root_system = R
        self.delta_k = delta_k
        self.delta_gk: tuple[Root, ...] = tuple(r for r in R.roots if r not in delta_k)
        self.weyl = W if W is not None else generate_weyl(R)
        self.weyl_k = subgroup_from(self.weyl, delta_k)
        self.cosets: CosetSpace = cosets(self.weyl, self.weyl_k)

        self._oriented: list[OrientedEdge] | None = None
        self.directions: list[tuple[Root, ...]] = []
        self._targets: list[dict[Root, int]] = []
        for w in self.cosets.representatives:
            dirs = sorted({root_class(w.apply(b)) for b in self.delta_gk})
            self.directions.append(tuple(dirs))
            self._targets.append({
                g: self.cosets.coset_of(self.weyl.mul(self.weyl.reflection(g), w)) for g in dirs
            })

    # -- vertices ---------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(len(self.cosets))

    def __len__(self):
        return len(self.cosets)

    def rep(self, v: int) -> WeylElement:
        return self.cosets.representatives[v]

    def rep_inverse(self, v: int) -> WeylElement:
        return self.weyl.inverse(self.rep(v))

    def act_vertex(self, w: WeylElement, v: int) -> int:
        """Index of the vertex ``w [w_v]``."""
        return self.cosets.coset_of(self.weyl.mul(w, self.rep(v)))

    def word(self, v: int) -> list[int]:
        return self.weyl.reduced_word(self.rep(v))

    # -- edges ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.delta_gk) // 2

    def out_edges(self, v: int) -> list[OrientedEdge]:
        return [OrientedEdge(v, d) for d in self.directions[v]]

    def oriented_edges(self) -> list[OrientedEdge]:
        if self._oriented is None:
            self._oriented = [e for v in self.vertices for e in self.out_edges(v)]
        return list(self._oriented)

    def target(self, e: OrientedEdge) -> int:
        try:
            return self._targets[e.source][e.direction]
        except (IndexError, KeyError):
            raise ValueError(f"{e} is not an edge of this graph") from None

    def reverse(self, e: OrientedEdge) -> OrientedEdge:
        return OrientedEdge(self.target(e), e.direction)

    def edges(self) -> list[tuple[OrientedEdge, OrientedEdge]]:
        """Undirected edges, each as (e, reverse(e)) with e the smaller realization."""
        out = []
        for e in self.oriented_edges():
            r = self.reverse(e)
            if e <= r:
                out.append((e, r))
        return out

    @property
    def num_edges(self) -> int:
        return len(self) * self.degree // 2

    def connection(self, e: OrientedEdge, e_prime: OrientedEdge) -> OrientedEdge:
        """theta_e(e'): the edge at target(e) in direction [sigma_gamma gamma']."""
        if e.source != e_prime.source:
            raise ValueError("connection needs two edges with a common source")
        q = self.target(e)
        d = root_class(self.root_system.reflect(e.direction, e_prime.direction))
        if d not in self._targets[q]:  # pragma: no cover - structural invariant
            raise AssertionError(f"connection left the edge set at vertex {q}")
        return OrientedEdge(q, d)

    def neighbours(self, v: int) -> list[int]:
        return [self.target(e) for e in self.out_edges(v)]


def build_graph(R: RootSystem, delta_k: Subsystem | Sequence[Sequence[int]],
                W: WeylGroup | None = None) -> GKMGraph:
    if not isinstance(delta_k, Subsystem):
        delta_k = Subsystem(tuple(sorted(tuple(r) for r in delta_k)))
    return GKMGraph(R, delta_k, W)


def connection(g: GKMGraph, e: OrientedEdge, e_prime: OrientedEdge) -> OrientedEdge:
    return g.connection(e, e_prime)


def is_simple(g: GKMGraph) -> bool:
    """True iff no two vertices are joined by more than one edge."""
    return all(len(set(g.neighbours(v))) == g.degree for v in g.vertices)


def euler_characteristic(g: GKMGraph) -> int:
    return len(g)
