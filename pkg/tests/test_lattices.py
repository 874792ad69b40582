import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import hurwitz, quats, units
from reflex24.hquat import ONE, OMEGA, Quat, norm, quat_mul, zeta_pow
from reflex24.lattices import (LINE_QUATS, PHI, LatticeTag, VertexClass, coset_index,
                               in_lattice, lattice_points, phi_decompose, phi_label,
                               vertex_class)

H = Fraction(1, 2)


def test_membership_examples():
    assert in_lattice(Quat(H, H, H, H), LatticeTag.Lambda)
    assert in_lattice(Quat(1, 0, 0, 1), LatticeTag.LambdaD4)
    assert not in_lattice(ONE, LatticeTag.LambdaD4)
    assert in_lattice(Quat(1, 1, 1, 1), LatticeTag.TwoLambda)
    assert not in_lattice(Quat(1, 1, 0, 0), LatticeTag.TwoLambda)
    assert not in_lattice(Quat(H, H, 0, 0), LatticeTag.Lambda)


def test_indices():
    assert coset_index(LatticeTag.TwoLambda, LatticeTag.LambdaD4) == 4
    assert coset_index(LatticeTag.LambdaD4, LatticeTag.Lambda) == 4
    assert coset_index(LatticeTag.Lambda, LatticeTag.Lambda) == 1
    assert coset_index(LatticeTag.TwoLambda, LatticeTag.Lambda) == 16
    with pytest.raises(ValueError):
        coset_index(LatticeTag.Lambda, LatticeTag.TwoLambda)


def test_phi_is_the_unit_sphere_of_lambda():
    # brute force: half-integer points of norm 1 in Lambda
    pts = {Quat.from_halves(*h) for h in itertools.product(range(-2, 3), repeat=4)}
    units_ = {x for x in pts if norm(x) == 1 and in_lattice(x, LatticeTag.Lambda)}
    assert units_ == set(PHI) and len(PHI) == 24


def test_phi_closed_under_products():
    s = set(PHI)
    assert all(quat_mul(x, y) in s for x in PHI for y in PHI)


def test_decompose_examples():
    assert phi_decompose(OMEGA) == ("1", 2)
    assert phi_decompose(Quat(-H, H, -H, -H)) == ("j", 2)
    assert phi_decompose(-ONE) == ("1", 3)
    assert phi_label(-ONE) == "-1"
    with pytest.raises(ValueError):
        phi_decompose(Quat(2))


@given(units)
def test_decompose_reconstructs(x):
    q, l = phi_decompose(x)
    assert quat_mul(LINE_QUATS[q], zeta_pow(l)) == x


def test_each_line_holds_six_units():
    counts = {}
    for x in PHI:
        counts[phi_decompose(x)[0]] = counts.get(phi_decompose(x)[0], 0) + 1
    assert counts == {"1": 6, "i": 6, "j": 6, "k": 6}


def test_vertex_class():
    assert vertex_class(Quat(0)) is VertexClass.CellCenter
    assert vertex_class(ONE) is VertexClass.Vertex
    assert vertex_class(Quat(0, H, -H)) is VertexClass.Neither


def test_lattice_points_against_scan():
    got = lattice_points(LatticeTag.LambdaD4, 2)
    scan = sorted(Quat(*v) for v in itertools.product(range(-2, 3), repeat=4)
                  if sum(v) % 2 == 0 and sum(t * t for t in v) <= 2)
    assert got == scan
    assert len(got) == 25   # origin plus the 24 roots of D4


@given(hurwitz, hurwitz)
def test_lattices_are_groups(x, y):
    for tag in LatticeTag:
        if in_lattice(x, tag) and in_lattice(y, tag):
            assert in_lattice(x - y, tag)


@given(hurwitz, hurwitz)
def test_lambda_is_a_ring(x, y):
    assert in_lattice(quat_mul(x, y), LatticeTag.Lambda)


@given(hurwitz)
def test_chain(x):
    # 2*Lambda in Lambda_D4 in Lambda
    assert in_lattice(x * 2, LatticeTag.TwoLambda)
    if in_lattice(x, LatticeTag.TwoLambda):
        assert in_lattice(x, LatticeTag.LambdaD4)
    if in_lattice(x, LatticeTag.LambdaD4):
        assert in_lattice(x, LatticeTag.Lambda)


@given(quats)
def test_membership_is_coordinate_rule(x):
    c = x.coords
    integral = all(t.denominator == 1 for t in c)
    assert in_lattice(x, LatticeTag.LambdaD4) == (integral and sum(c) % 2 == 0)
