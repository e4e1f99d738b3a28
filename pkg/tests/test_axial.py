from itertools import product

import pytest

from gkm_homogeneous.axial import (
    AxialFunction,
    Section,
    check_acs_condition,
    enumerate_sections,
    verify_axial,
)
from gkm_homogeneous.rootsystem import neg, root_class

from spaces import MATRIX, axial_functions, label, space

SECTION_COUNTS = {
    ("A2", "torus"): 8,
    ("A3", "torus"): 64,
    ("A3", (1, 2)): 2,
    ("B2", (1,)): 4,
    ("B2", (2,)): 4,
    ("B3", (1, 2)): 4,
    ("G2", "long"): 2,
    ("B2", "long"): 0,
}


def brute_force_sections(g):
    classes = sorted({root_class(a) for a in g.delta_gk})
    found = set()
    for signs in product((1, -1), repeat=len(classes)):
        s = Section.from_roots(c if sg == 1 else neg(c) for c, sg in zip(classes, signs))
        if s.is_equivariant(g):
            found.add(s.delta0)
    return found


@pytest.mark.parametrize("case", MATRIX, ids=label)
def test_section_counts(case):
    g = space(*case)
    sections = enumerate_sections(g)
    assert len(sections) == SECTION_COUNTS[case]
    assert {s.delta0 for s in sections} == brute_force_sections(g)
    assert check_acs_condition(g) == bool(sections)


@pytest.mark.parametrize("case", MATRIX, ids=label)
def test_sections_are_closed_under_negation(case):
    sections = enumerate_sections(space(*case))
    images = {s.delta0 for s in sections}
    for s in sections:
        assert s.negated().delta0 in images
        assert len(s.delta0) == space(*case).degree


def connection_defect(a, e, ep):
    # independent restatement of the connection identity
    g = a.graph
    R = g.root_system
    x, y = a.value(e), a.value(ep)
    k = 2 * R.inner(y, x) // R.norm2(x)
    z = a.value(g.connection(e, ep))
    return tuple(zi - yi + k * xi for zi, yi, xi in zip(z, y, x))


@pytest.mark.parametrize("case", MATRIX, ids=label)
def test_axial_axioms(case):
    for a in axial_functions(*case):
        assert verify_axial(a).ok
        g = a.graph
        for v in g.vertices:
            for e in g.out_edges(v):
                assert a.value(g.reverse(e)) == neg(a.value(e))
                assert root_class(a.value(e)) == e.direction
                for ep in g.out_edges(v):
                    assert not any(connection_defect(a, e, ep))


def test_g2_sections():
    images = {s.delta0 for s in enumerate_sections(space("G2", "long"))}
    assert images == {((-2, -1), (1, 0), (1, 1)), ((-1, -1), (-1, 0), (2, 1))}


def test_g2_axial_values_sum_to_zero():
    for a in axial_functions("G2", "long"):
        for v in a.graph.vertices:
            assert tuple(map(sum, zip(*a.values_at(v)))) == (0, 0)


def test_a2_nonintegrable_section_sums_to_zero():
    g = space("A2", "torus")
    s = Section.from_roots([(1, 0), (0, 1), (-1, -1)])
    assert s in set(enumerate_sections(g))
    a = AxialFunction(g, s)
    assert verify_axial(a).ok
    for v in g.vertices:
        assert tuple(map(sum, zip(*a.values_at(v)))) == (0, 0)


def test_a2_standard_section_values():
    g = space("A2", "torus")
    a = AxialFunction(g, Section.from_roots([(1, 0), (0, 1), (1, 1)]))
    assert sorted(a.values_at(0)) == [(0, 1), (1, 0), (1, 1)]
    for v in g.vertices:
        w = g.rep(v)
        assert sorted(a.values_at(v)) == sorted(w.apply(b) for b in [(1, 0), (0, 1), (1, 1)])


def test_corrupted_section_breaks_only_the_connection():
    g = space("G2", "long")
    s = Section.from_roots([(-2, -1), (-1, 0), (1, 1)])
    assert not s.is_equivariant(g)
    report = verify_axial(AxialFunction(g, s))
    assert report.as_dict() == {
        "ok": False, "independence": True, "antisymmetry": True, "connection": False}
    assert report.first_violation.axiom == 3


def test_b2_orthogonal_pair_has_no_structure():
    g = space("B2", "long")
    assert not check_acs_condition(g)
    assert enumerate_sections(g) == []


def test_from_roots_rejects_two_choices_per_class():
    with pytest.raises(ValueError):
        Section.from_roots([(1, 0), (-1, 0)])
