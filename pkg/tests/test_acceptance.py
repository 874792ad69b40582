"""Acceptance criteria 1-10, exact. The terminal summary prints one line per criterion."""
from fractions import Fraction

import pytest

from reflex24.arrangement import (Window, hyperplane_of, intersect, verify_cell_incidence,
                                  verify_intersection_points)
from reflex24.complexes import (build_24cell, build_K, full_voronoi_link, interior_vertices,
                                k0_link, k0_triangles, link_in_K, removed_link_edges)
from reflex24.graphs import (cat1_check, generalized_petersen, hypercube, is_isomorphic,
                             is_subdivided_theta)
from reflex24.groups import (R1, R1_PRIME, RI, antipodal_at, generate_G4, reflection, stabilizer,
                             verify_reflection_fact, verify_translation_fact)
from reflex24.hquat import ONE, Quat
from reflex24.isometry import IDENTITY, FixedKind, fixed_set
from reflex24.lattices import LatticeTag, coset_index
from reflex24.presentations import (abelianization, equivalent_presentations,
                                    extract_presentation, k0_complex, parse_presentation,
                                    quotient, stable_quotient, table_is_permutation_rep,
                                    todd_coxeter)
from reflex24.verify import same_complex_line

H = Fraction(1, 2)


@pytest.fixture(scope="module")
def K8():
    return build_K(Window(8))


@pytest.mark.criterion(1)
def test_criterion_1_g4():
    g4 = generate_G4()
    assert len(g4) == 24
    labels = sorted(g4.labels.values())
    want = sorted(f"{s}{kind}_{q}{sq}" for s in ("", "-") for q in "1ijk"
                  for kind, sq in (("L", ""), ("r", ""), ("r", "^2")))
    assert labels == want


@pytest.mark.criterion(2)
def test_criterion_2_fixed_lines():
    dirs = {"1": Quat(0, 1, -1, 0), "i": Quat(1, 0, 0, 1), "j": Quat(1, 0, 0, -1), "k": Quat(0, 1, 1, 0)}
    for lab, d in dirs.items():
        fs = fixed_set(reflection(lab))
        assert fs.kind is FixedKind.ComplexLine and fs.basepoint == Quat(0)
        assert same_complex_line(fs.direction, d)
    res = intersect(hyperplane_of(R1_PRIME), hyperplane_of(RI))
    assert res.point == Quat(1, 0, 0, 1)
    assert fixed_set(R1_PRIME).contains(res.point) and fixed_set(RI).contains(res.point)


@pytest.mark.criterion(3)
def test_criterion_3_k0():
    cell = build_24cell()
    assert cell.f_vector == (24, 96, 96, 24)
    tris = k0_triangles(cell)
    assert len(tris) == 72
    assert {e for t in tris for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))} == set(cell.edges)
    for v in range(24):
        assert sum(1 for t in tris if v in t) == 9
        g = k0_link(cell, v)
        assert (g.n_nodes, g.n_edges) == (8, 9) and is_subdivided_theta(g)
        r = cat1_check(g)
        assert r.passed and r.min_cycle_units == 6


@pytest.mark.criterion(4)
def test_criterion_4_arrangement():
    w = Window(8)
    ir = verify_intersection_points(w)
    assert not ir.non_lattice and not ir.missing
    cr = verify_cell_incidence(w)
    assert cr.violations == [] and cr.counts["Violation"] == 0


@pytest.mark.criterion(5)
def test_criterion_5_bfs():
    tr = verify_translation_fact(6)
    assert tr.all_in_two_lambda and tr.translations
    rf = verify_reflection_fact(6)
    assert rf.n_reflections > 0 and rf.unmatched == [] and rf.odd_parity == []


@pytest.mark.criterion(6)
def test_criterion_6_links(K8):
    inner = interior_vertices(K8)
    assert inner
    gp, q4 = generalized_petersen(8, 3), hypercube(4)
    for v in inner:
        g = link_in_K(K8, v)
        assert (g.n_nodes, g.n_edges) == (16, 24) and g.is_regular(3)
        assert is_isomorphic(g, gp)
        full = full_voronoi_link(K8, v)
        assert is_isomorphic(full, q4)
        removed = [[x for x in t if x != v] for t in removed_link_edges(K8, v)]
        assert len(removed) == 8 and full.without_edges(removed).edges == g.edges
        r = cat1_check(g)
        assert r.passed and r.min_cycle_units == 6


@pytest.mark.criterion(7)
def test_criterion_7_stabilizers():
    assert len(stabilizer(Quat(1, 0, 0, 1))) == 24
    v = Quat(H, H, H, H)
    s = stabilizer(v)
    assert len(s) == 2 and set(s) == {IDENTITY, antipodal_at(v)}
    assert stabilizer(Quat(Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 11))) == [IDENTITY]


@pytest.mark.criterion(8)
def test_criterion_8_quotients():
    q0 = quotient(k0_complex(), "K0")
    assert q0.counts == (1, 4, 3)
    assert equivalent_presentations(extract_presentation(q0), parse_presentation("abd,bcd,cad"))
    q = stable_quotient("K", 4)
    assert q.counts == (1, 4, 4)
    assert equivalent_presentations(extract_presentation(q), parse_presentation("abd,bcd,cad,cba"))


@pytest.mark.criterion(9)
def test_criterion_9_groups():
    tet = parse_presentation("abd,bcd,cad,cba")
    r = todd_coxeter(tet)
    assert r.status == "Finite" and r.order == 24
    assert table_is_permutation_rep(tet, r.table)
    a4 = abelianization(tet)
    a3 = abelianization(parse_presentation("abd,bcd,cad"))
    assert (a4.free_rank, a4.torsion) == (0, (3,))
    assert (a3.free_rank, a3.torsion) == (1, ())


@pytest.mark.criterion(10)
def test_criterion_10_indices():
    assert coset_index(LatticeTag.LambdaD4, LatticeTag.Lambda) == 4
    assert coset_index(LatticeTag.TwoLambda, LatticeTag.LambdaD4) == 4
