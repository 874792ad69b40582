"""Complex-structure-preserving euclidean maps x -> q*x*zeta**l + v."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .hquat import (ONE, ZERO, ComplexScalar, Quat, conj, format_quat, herm,
                    norm, parse_quat, quat_mul, real, zeta_pow, zeta_scalar)

# largest element order in the finite groups considered here
ORDER_CAP = 12

_BASIS = (Quat(1), Quat(0, 1), Quat(0, 0, 1), Quat(0, 0, 0, 1))


class _Infinite:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Infinite"


INFINITE = _Infinite()


class FixedKind(str, enum.Enum):
    Empty = "Empty"
    Point = "Point"
    ComplexLine = "ComplexLine"
    All = "All"


class IsometryClass(str, enum.Enum):
    Identity = "Identity"
    Translation = "Translation"
    Reflection = "Reflection"
    PointIsometry = "PointIsometry"
    Glide = "Glide"


@dataclass(frozen=True)
class FixedSet:
    kind: FixedKind
    basepoint: Optional[Quat] = None
    direction: Optional[Quat] = None

    def contains(self, x: Quat) -> bool:
        if self.kind is FixedKind.Empty:
            return False
        if self.kind is FixedKind.All:
            return True
        if self.kind is FixedKind.Point:
            return x == self.basepoint
        # x - p must lie in direction*C; that line is spanned over R by d and d*omega
        diff = x - self.basepoint
        d = self.direction
        dw = quat_mul(d, zeta_pow(2))
        return linalg.rank([d.coords, dw.coords, diff.coords]) == 2


def _canonical(q: Quat, l: int) -> tuple[Quat, int]:
    lead = next(n for n in q.numerators if n != 0)
    if lead < 0:
        return -q, (l + 3) % 6
    return q, l % 6


@dataclass(frozen=True)
class EuclideanMap:
    """The map x -> q*x*zeta**l + v with q a unit quaternion.

    (q, l) and (-q, l+3) describe the same map; the stored form has the
    first nonzero coordinate of q positive.
    """

    q: Quat
    l: int = 0
    v: Quat = ZERO

    def __post_init__(self):
        if norm(self.q) != 1:
            raise ValueError(f"q must be a unit quaternion, got {self.q}")
        q, l = _canonical(self.q, self.l)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "l", l)

    def __call__(self, x: Quat) -> Quat:
        return apply(self, x)

    def __matmul__(self, other: "EuclideanMap") -> "EuclideanMap":
        return compose(self, other)

    @property
    def linear(self) -> "EuclideanMap":
        return EuclideanMap(self.q, self.l)

    def is_linear(self) -> bool:
        return self.v.is_zero()

    def key(self) -> tuple:
        return (self.q.sort_key(), self.l, self.v.sort_key())

    def __str__(self) -> str:
        return f"({format_quat(self.q)}; {self.l}; {format_quat(self.v)})"

    def to_json(self) -> list:
        return [self.q.to_json(), self.l, self.v.to_json()]

    @classmethod
    def from_json(cls, data) -> "EuclideanMap":
        q, l, v = data
        return cls(Quat.from_json(q), int(l), Quat.from_json(v))

    @classmethod
    def parse(cls, text: str) -> "EuclideanMap":
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"expected '(q; l; v)', got {text!r}")
        parts = body[1:-1].split(";")
        if len(parts) != 3:
            raise ValueError(f"expected '(q; l; v)', got {text!r}")
        return cls(parse_quat(parts[0]), int(parts[1]), parse_quat(parts[2]))


IDENTITY = EuclideanMap(ONE)


def translation(v: Quat) -> EuclideanMap:
    return EuclideanMap(ONE, 0, v)


def left_mult(q: Quat) -> EuclideanMap:
    return EuclideanMap(q, 0)


def apply(f: EuclideanMap, x: Quat) -> Quat:
    return quat_mul(quat_mul(f.q, x), zeta_pow(f.l)) + f.v


def compose(f: EuclideanMap, g: EuclideanMap) -> EuclideanMap:
    """f o g, i.e. x -> f(g(x))."""
    v = quat_mul(quat_mul(f.q, g.v), zeta_pow(f.l)) + f.v
    return EuclideanMap(quat_mul(f.q, g.q), f.l + g.l, v)


def invert(f: EuclideanMap) -> EuclideanMap:
    qi = conj(f.q)
    v = -quat_mul(quat_mul(qi, f.v), zeta_pow(-f.l))
    return EuclideanMap(qi, -f.l, v)


def conjugate_by(h: EuclideanMap, f: EuclideanMap) -> EuclideanMap:
    """h o f o h^-1."""
    return compose(compose(h, f), invert(h))


def power(f: EuclideanMap, n: int) -> EuclideanMap:
    if n < 0:
        return power(invert(f), -n)
    out = IDENTITY
    for _ in range(n):
        out = compose(f, out)
    return out


def linear_matrix(f: EuclideanMap) -> list[list[Fraction]]:
    """4x4 real matrix of the linear part, acting on coordinate columns."""
    cols = [apply(f.linear, e).coords for e in _BASIS]
    return [[cols[c][r] for c in range(4)] for r in range(4)]


def fixed_set(f: EuclideanMap) -> FixedSet:
    """Solve f(x) = x exactly as a 4x4 rational linear system."""
    m = linear_matrix(f)
    a = [[m[r][c] - (1 if r == c else 0) for c in range(4)] for r in range(4)]
    sol = linalg.solve_affine(a, [-x for x in f.v.coords])
    if sol is None:
        return FixedSet(FixedKind.Empty)
    x, kernel = sol
    p = Quat(*x)
    if not kernel:
        return FixedSet(FixedKind.Point, p)
    if len(kernel) == 4:
        return FixedSet(FixedKind.All, p)
    if len(kernel) != 2:
        raise ArithmeticError("fixed set of a complex-linear map must have even real dimension")
    return FixedSet(FixedKind.ComplexLine, p, Quat(*kernel[0]))


def is_linear_identity(f: EuclideanMap) -> bool:
    return f.l == 0 and f.q == ONE


def classify(f: EuclideanMap) -> IsometryClass:
    if is_linear_identity(f):
        return IsometryClass.Identity if f.v.is_zero() else IsometryClass.Translation
    fs = fixed_set(f)
    if fs.kind is FixedKind.Empty:
        return IsometryClass.Glide
    if real(f.q) == real(zeta_pow(f.l)):
        return IsometryClass.Reflection
    return IsometryClass.PointIsometry


def linear_order(f: EuclideanMap):
    g = f.linear
    acc = g
    for n in range(1, ORDER_CAP + 1):
        if is_linear_identity(acc):
            return n
        acc = compose(g, acc)
    return INFINITE


def order_of(f: EuclideanMap):
    """Least n >= 1 with f**n the identity, or INFINITE."""
    n = linear_order(f)
    if n is INFINITE:
        return INFINITE
    return n if power(f, n) == IDENTITY else INFINITE


def rotated_direction(f: EuclideanMap) -> Quat:
    """A nonzero vector in the image of (linear part - identity).

    For a reflection this spans the complex line that gets rotated.
    """
    for e in _BASIS:
        w = apply(f.linear, e) - e
        if not w.is_zero():
            return w
    raise ValueError("linear part is the identity")


def reflection_scalar(f: EuclideanMap) -> ComplexScalar:
    """The unit complex number z by which a reflection multiplies its rotated line."""
    return zeta_scalar(2 * f.l)


def reflection_formula_holds(f: EuclideanMap) -> bool:
    """Check f(w) = w - v*<v, w-p>*(1 - z)/<v, v> on a real basis.

    Here p is a fixed point, v spans the rotated line and z is the
    rotation scalar. Both sides are real-affine, so the four basis
    vectors plus p settle the identity.
    """
    if classify(f) is not IsometryClass.Reflection:
        return False
    p = fixed_set(f).basepoint
    v = rotated_direction(f)
    one_minus_z = ComplexScalar(1, 0) - reflection_scalar(f)
    nv = norm(v)
    for w in (p,) + tuple(p + e for e in _BASIS):
        coeff = herm(v, w - p) * one_minus_z * (1 / nv)
        if apply(f, w) != w - quat_mul(v, coeff.to_quat()):
            return False
    return True


def coordinates(x: Quat, basis: tuple[Quat, Quat]) -> tuple[ComplexScalar, ComplexScalar]:
    """Unique (z1, z2) with x = b1*z1 + b2*z2, solved through the Gram matrix."""
    b1, b2 = basis
    g11, g12, g21, g22 = herm(b1, b1), herm(b1, b2), herm(b2, b1), herm(b2, b2)
    det = g11 * g22 - g12 * g21
    if det.is_zero():
        raise ValueError("basis vectors lie in one complex line")
    h1, h2 = herm(b1, x), herm(b2, x)
    z1 = (g22 * h1 - g12 * h2) / det
    z2 = (g11 * h2 - g21 * h1) / det
    return z1, z2


def matrix_of_linear(f: EuclideanMap, basis: tuple[Quat, Quat]):
    """2x2 complex matrix M with coords(f(x)) = M coords(x)."""
    if not f.is_linear():
        raise ValueError("matrix_of_linear needs a map with zero translation")
    cols = [coordinates(apply(f, b), basis) for b in basis]
    return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]
