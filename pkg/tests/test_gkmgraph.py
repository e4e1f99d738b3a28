import networkx as nx
import pytest

from gkm_homogeneous import build_graph, euler_characteristic, is_simple
from gkm_homogeneous.gkmgraph import OrientedEdge
from gkm_homogeneous.rootsystem import Subsystem, root_class

from spaces import MATRIX, label, root_system, space


def multigraph(g):
    G = nx.MultiGraph()
    G.add_nodes_from(g.vertices)
    for e, r in g.edges():
        G.add_edge(e.source, r.source, label=e.direction)
    return G


@pytest.mark.parametrize("case", MATRIX, ids=label)
def test_structural_counts(case):
    g = space(*case)
    assert len(g) * len(g.weyl_k) == len(g.weyl)
    assert g.degree * 2 == len(g.delta_gk)
    assert all(len(g.out_edges(v)) == g.degree for v in g.vertices)
    assert g.num_edges == len(g.edges())
    assert euler_characteristic(g) == len(g)


@pytest.mark.parametrize("case", MATRIX, ids=label)
def test_reverse_and_connection(case):
    g = space(*case)
    for e in g.oriented_edges():
        r = g.reverse(e)
        assert g.reverse(r) == e
        assert g.target(r) == e.source
        assert e.source != g.target(e)
        out_p = set(g.out_edges(e.source))
        image = {g.connection(e, f) for f in out_p}
        assert image == set(g.out_edges(g.target(e)))
        assert g.connection(e, e) == r
        for f in out_p:
            assert g.connection(r, g.connection(e, f)) == f


@pytest.mark.parametrize("case", MATRIX, ids=label)
def test_weyl_action_is_a_graph_automorphism(case):
    g = space(*case)
    for s in g.weyl.generators:
        perm = [g.act_vertex(s, v) for v in g.vertices]
        assert sorted(perm) == list(g.vertices)
        for e in g.oriented_edges():
            d = root_class(s.apply(e.direction))
            moved = OrientedEdge(perm[e.source], d)
            assert g.target(moved) == perm[g.target(e)]


def test_a2_torus_is_k33():
    g = space("A2", "torus")
    G = nx.Graph(multigraph(g))
    assert nx.is_isomorphic(G, nx.complete_bipartite_graph(3, 3))
    assert nx.is_bipartite(G)
    assert is_simple(g)


def test_a1_torus_is_an_edge():
    g = space("A1", "torus")
    assert len(g) == 2 and g.num_edges == 1


def test_g2_long_three_parallel_edges():
    g = space("G2", "long")
    assert len(g) == 2 and g.num_edges == 3
    assert not is_simple(g)
    assert sorted(e.direction for e, _ in g.edges()) == [(1, 0), (1, 1), (2, 1)]


def test_b2_orthogonal_pair_is_a_double_edge():
    g = space("B2", "long")
    assert len(g) == 2 and g.num_edges == 2
    assert not is_simple(g)


@pytest.mark.parametrize("name, simple", [
    ("A3", ()), ("A3", (1,)), ("A3", (2,)), ("A3", (1, 3)), ("A3", (1, 2)),
    ("B3", (1,)), ("B3", (3,)), ("B3", (2, 3)), ("C3", (2,)), ("C3", (1, 3)),
    ("G2", (1,)), ("G2", (2,)), ("D4", (1, 3, 4)),
])
def test_parabolic_graphs_are_simple(name, simple):
    g = space(name, simple) if simple else space(name, "torus")
    assert is_simple(g)
    assert nx.is_connected(nx.Graph(multigraph(g)))


def test_cp3_is_complete():
    g = space("A3", (1, 2))
    assert nx.is_isomorphic(nx.Graph(multigraph(g)), nx.complete_graph(4))


def test_rejects_non_closed_subsystem():
    R = root_system("A2")
    with pytest.raises(ValueError):
        build_graph(R, [(1, 0), (-1, 0), (0, 1), (0, -1)])


def test_rejects_full_root_system():
    R = root_system("A2")
    with pytest.raises(ValueError):
        build_graph(R, Subsystem(R.roots))


def test_unknown_edge():
    g = space("A2", "torus")
    with pytest.raises(ValueError):
        g.target(OrientedEdge(0, (5, 5)))
