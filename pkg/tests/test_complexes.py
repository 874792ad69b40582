import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import planes_hitting
from reflex24.arrangement import FACET_CENTERS, Window, enumerate_hyperplanes
from reflex24.complexes import (OCTAHEDRON_RADIUS_SQ, BoundaryVertex, CellComplex2, build_24cell,
                                build_K, full_voronoi_link, incident_centers, interior_vertices,
                                is_interior, k0_link, k0_triangles, lens_assignment, link_in_K,
                                removed_link_edges, simplex_hits_arrangement, triangle_included)
from reflex24.graphs import (bipartition, cat1_check, generalized_petersen, hypercube,
                             is_biconnected, is_isomorphic, is_subdivided_theta)
from reflex24.hquat import I, J, K, ONE, ZETA, Quat, norm
from reflex24.lattices import PHI, LatticeTag, in_lattice, lattice_points

H = Fraction(1, 2)
CELL = build_24cell()


@pytest.fixture(scope="module")
def K2():
    return build_K(Window(2))


@pytest.fixture(scope="module")
def K4():
    # smallest window with interior vertices
    return build_K(Window(4))


def test_f_vector():
    assert CELL.f_vector == (24, 96, 96, 24)


def test_face_counts_against_clique_scan():
    verts = list(PHI)
    adj = {(a, b) for a, b in itertools.permutations(range(24), 2) if norm(verts[a] - verts[b]) == 1}
    tris = [t for t in itertools.combinations(range(24), 3)
            if all((x, y) in adj for x, y in itertools.combinations(t, 2))]
    assert len(adj) // 2 == 96 and len(tris) == 96
    per_edge = Counter(e for t in CELL.triangles for e in itertools.combinations(t, 2))
    assert set(per_edge.values()) == {3}


def test_octahedron_radius():
    # brute force: the nearest cell vertices to each facet center form its octahedron
    for f in FACET_CENTERS:
        d = sorted(norm(u - f) for u in PHI)
        assert d[0] == OCTAHEDRON_RADIUS_SQ
        assert d[:7].count(d[0]) == 6 and d[6] > d[0]


def test_vertex_in_six_octahedra():
    counts = Counter(t for _, members in CELL.octahedra for t in members)
    assert set(counts.values()) == {6} and len(counts) == 24


def test_k0_counts():
    tris = k0_triangles(CELL)
    assert len(tris) == 72
    per_vertex = Counter(x for t in tris for x in t)
    assert set(per_vertex.values()) == {9}
    # the full 1-skeleton survives
    assert {e for t in tris for e in itertools.combinations(t, 2)} == set(CELL.edges)


def test_k0_rule_examples():
    x = Quat(H, H, H, -H)
    assert norm(ONE - x) == 1 and norm(ZETA - x) == 1
    assert triangle_included((ONE, ZETA, x))
    # any face whose vertices sit on three distinct lines is dropped
    for t in CELL.triangles:
        pts = [CELL.vertices[a] for a in t]
        from reflex24.lattices import line_label
        if len({line_label(p) for p in pts}) == 3:
            assert not triangle_included(tuple(pts))
            break
    else:
        pytest.fail("no three-line triangle found")


def test_k0_links():
    for v in range(24):
        g = k0_link(CELL, v)
        assert (g.n_nodes, g.n_edges) == (8, 9)
        assert is_subdivided_theta(g) and is_biconnected(g)
        r = cat1_check(g)
        assert r.passed and r.min_cycle_units == 6


def test_k0_kept_triangles_avoid_the_planes():
    # projection oracle: kept faces meet no hyperplane, removed ones meet a plane through 0
    keep = set(k0_triangles(CELL))
    for t in CELL.triangles:
        hits = planes_hitting([CELL.vertices[a] for a in t])
        assert (not hits) == (t in keep)


def test_K_vertices(K2):
    centers = lattice_points(LatticeTag.LambdaD4, 2)
    want = {c + u for c in centers for u in PHI}
    assert set(K2.vertices) == want
    assert all(in_lattice(x, LatticeTag.Lambda) and not in_lattice(x, LatticeTag.LambdaD4)
               for x in K2.vertices)
    assert K2.check_invariants() == []


def test_K_triangles_against_oracle(K2):
    for t in K2.triangles:
        assert planes_hitting(K2.coords(t)) == []
    for t in K2.removed_triangles:
        assert planes_hitting(K2.coords(t)) != []
    for e in K2.edges:
        assert planes_hitting(K2.coords(e)) == []


def test_K_triangles_against_library_test(K2):
    sample = K2.triangles[::7] + K2.removed_triangles[::7]
    for t in sample:
        assert sorted(simplex_hits_arrangement(K2.coords(t))) == sorted(planes_hitting(K2.coords(t)))


def test_K_links(K4):
    K2 = K4
    inner = interior_vertices(K4)
    assert inner
    gp, q4 = generalized_petersen(8, 3), hypercube(4)
    for v in inner:
        g = link_in_K(K2, v)
        full = full_voronoi_link(K2, v)
        assert (g.n_nodes, g.n_edges) == (16, 24) and g.is_regular(3)
        assert is_isomorphic(g, gp)
        assert (full.n_nodes, full.n_edges) == (16, 32) and full.is_regular(4)
        assert is_isomorphic(full, q4)
        parts = bipartition(full)
        assert sorted(map(len, parts)) == [8, 8]
        removed = removed_link_edges(K2, v)
        assert len(removed) == 8
        assert full.without_edges([[x for x in t if x != v] for t in removed]).edges == g.edges
        assert sum(1 for t in K2.triangles if v in t) == 24
        r = cat1_check(g)
        assert r.passed and r.min_cycle_units == 6


def test_boundary_vertex(K2):
    outer = next(v for v in range(len(K2.vertices)) if not is_interior(K2, v))
    with pytest.raises(BoundaryVertex):
        link_in_K(K2, outer)


def test_incident_centers():
    cs = incident_centers(ONE)
    assert len(cs) == 8 and all(norm(ONE - c) == 1 for c in cs)


def test_json_round_trip(K2):
    back = CellComplex2.from_json(K2.to_json())
    assert back.vertices == K2.vertices and back.triangles == K2.triangles


def test_lenses():
    t = lens_assignment()
    centers = {lens.center for lens in t.lenses}
    for c in (Quat(0, H, 0, -H), Quat(0, -H, H, 0), Quat(0, 0, -H, H)):
        assert c in centers
    lens0 = t.lenses[0]
    from reflex24.lattices import phi_label
    assert sorted(map(phi_label, lens0.front)) == sorted(["jzeta^2", "i", "kzeta^4"])
    assert sorted(map(phi_label, lens0.back)) == sorted(["jzeta", "-k", "izeta^5"])
    assert all(len(lens.octahedron) == 6 for lens in t.lenses)
    assert all(roles for roles in t.vertex_roles.values())
    assert len({(len(l.front), len(l.back)) for l in t.lenses}) == 1
    # every octahedron is a lens center or split across two neighbouring lenses
    assert all(len(r) in (1, 2) for r in t.octahedron_roles.values())


@given(st.sampled_from(range(96)))
def test_k0_rule_is_line_count(tidx):
    t = CELL.triangles[tidx]
    from reflex24.lattices import line_label
    lines = {line_label(CELL.vertices[a]) for a in t}
    assert triangle_included(tuple(CELL.vertices[a] for a in t)) == (len(lines) < 3)
