from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import quats, units
from reflex24.groups import R1, R1_PRIME, RI, antipodal_at
from reflex24.hquat import I, J, K, OMEGA, ONE, ZETA, ComplexScalar, Quat, norm, quat_mul, zeta_pow
from reflex24.isometry import (IDENTITY, INFINITE, EuclideanMap, FixedKind, IsometryClass,
                               apply, classify, compose, conjugate_by, fixed_set, invert,
                               left_mult, matrix_of_linear, order_of, power,
                               reflection_formula_holds, translation)

H = Fraction(1, 2)
maps = st.builds(EuclideanMap, units, st.integers(-7, 7), quats)
T2 = translation(Quat(2))


def test_compose_identity():
    assert compose(R1, IDENTITY) == R1 == compose(IDENTITY, R1)


def test_t2_from_generators():
    assert compose(R1_PRIME, invert(R1)) == T2


def test_r1_squared():
    assert compose(R1, R1) == EuclideanMap(OMEGA, 2)


def test_r1_images():
    assert apply(R1, ONE) == OMEGA
    assert apply(R1, I) == Quat(-H, H, -H, -H)
    assert apply(R1_PRIME, Quat(1, 0, 0, 1)) == Quat(1, 0, 0, 1)


def test_fixed_sets():
    fs = fixed_set(R1)
    assert fs.kind is FixedKind.ComplexLine and fs.basepoint == Quat(0)
    assert fs.contains(I - J) and fs.contains(quat_mul(I - J, OMEGA)) and not fs.contains(ONE)
    assert fixed_set(T2).kind is FixedKind.Empty
    anti = antipodal_at(ONE)
    assert fixed_set(anti) == fixed_set(anti) and fixed_set(anti).kind is FixedKind.Point
    assert fixed_set(anti).basepoint == ONE
    assert fixed_set(IDENTITY).kind is FixedKind.All


def test_classify_examples():
    assert classify(R1) is IsometryClass.Reflection
    assert classify(left_mult(I)) is IsometryClass.PointIsometry
    assert classify(translation(ZETA * 2)) is IsometryClass.Translation
    assert classify(IDENTITY) is IsometryClass.Identity


def test_orders():
    assert order_of(R1) == 3
    assert order_of(antipodal_at(Quat(1, 0, 0, 1))) == 2
    assert order_of(T2) is INFINITE
    assert order_of(IDENTITY) == 1


def test_matrices_in_a_complex_basis():
    basis = (ONE, I - J)
    w = ComplexScalar(0, 1)
    w2 = ComplexScalar(-1, -1)
    zero = ComplexScalar(0, 0)
    right = EuclideanMap(ONE, 2)          # x -> x*omega
    assert matrix_of_linear(right, basis) == [[w, zero], [zero, w]]
    assert matrix_of_linear(left_mult(OMEGA), basis) == [[w, zero], [zero, w2]]
    one = ComplexScalar(1, 0)
    assert matrix_of_linear(IDENTITY, basis) == [[one, zero], [zero, one]]


def test_non_unit_rejected():
    with pytest.raises(ValueError):
        EuclideanMap(Quat(2))


def test_canonical_sign():
    # (q, l) and (-q, l+3) are the same map
    f, g = EuclideanMap(ZETA, 1), EuclideanMap(-ZETA, 4)
    assert f == g and hash(f) == hash(g)
    assert all(apply(f, x) == apply(g, x) for x in (ONE, I, J, K))


@given(maps, maps, quats)
def test_compose_apply_law(f, g, x):
    assert apply(compose(f, g), x) == apply(f, apply(g, x))


@given(maps, quats, quats)
def test_is_an_isometry(f, x, y):
    assert norm(apply(f, x) - apply(f, y)) == norm(x - y)


@given(maps, quats)
def test_inverse(f, x):
    assert apply(invert(f), apply(f, x)) == x
    assert compose(f, invert(f)) == IDENTITY


@given(maps, maps, maps)
def test_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(maps, maps)
def test_conjugation_preserves_class(f, h):
    g = conjugate_by(h, f)
    assert classify(g) is classify(f)


@given(maps)
def test_fixed_set_is_fixed(f):
    fs = fixed_set(f)
    if fs.kind is FixedKind.Point:
        assert apply(f, fs.basepoint) == fs.basepoint
    if fs.kind is FixedKind.ComplexLine:
        for p in (fs.basepoint, fs.basepoint + fs.direction,
                  fs.basepoint + quat_mul(fs.direction, OMEGA) * 3):
            assert apply(f, p) == p


@given(maps)
def test_reflections_obey_the_formula(f):
    if classify(f) is IsometryClass.Reflection:
        assert reflection_formula_holds(f)


@given(maps)
def test_power_matches_repeated_compose(f):
    assert power(f, 3) == compose(f, compose(f, f))
    assert power(f, -1) == invert(f)


@given(maps)
def test_text_round_trip(f):
    assert EuclideanMap.from_json(f.to_json()) == f
    assert EuclideanMap.parse(str(f)) == f
