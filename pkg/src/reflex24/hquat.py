"""Exact rational quaternions and the complex structure H_omega.

A quaternion is stored as four integer numerators over one positive common
denominator, kept in lowest terms. Every coordinate read back out is a
``fractions.Fraction``; no floating point is used anywhere.

The distinguished complex subalgebra is span(1, omega) with
omega = (-1+i+j+k)/2, and complex scalars are written s + t*omega.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational", "Quat", "ComplexScalar", "ONE", "ZERO", "I", "J", "K",
    "OMEGA", "ZETA", "zeta_pow", "zeta_scalar", "quat_mul", "conj", "norm",
    "real", "proj_C", "herm", "format_quat", "parse_quat",
]


def _normalize(nums, den):
    if den == 0:
        raise ZeroDivisionError("quaternion with zero denominator")
    if den < 0:
        nums = tuple(-n for n in nums)
        den = -den
    g = gcd(gcd(gcd(gcd(nums[0], nums[1]), nums[2]), nums[3]), den)
    if g > 1:
        nums = tuple(n // g for n in nums)
        den //= g
    return nums, den


class Quat:
    """Immutable rational quaternion a + b*i + c*j + d*k."""

    __slots__ = ("_n", "_d", "_hash", "_key")

    def __init__(self, a: Number = 0, b: Number = 0, c: Number = 0, d: Number = 0):
        fs = [Fraction(x) for x in (a, b, c, d)]
        den = 1
        for f in fs:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = tuple(f.numerator * (den // f.denominator) for f in fs)
        self._n, self._d = _normalize(nums, den)
        self._hash = None
        self._key = None

    @classmethod
    def _raw(cls, nums, den) -> "Quat":
        obj = cls.__new__(cls)
        obj._n, obj._d = _normalize(nums, den)
        obj._hash = None
        obj._key = None
        return obj

    @classmethod
    def from_halves(cls, a: int, b: int, c: int, d: int) -> "Quat":
        """Build (a + bi + cj + dk)/2 from integers."""
        return cls._raw((a, b, c, d), 2)

    # coordinates -----------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._d)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._d)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._d)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(n, self._d) for n in self._n)

    @property
    def numerators(self) -> tuple[int, int, int, int]:
        return self._n

    @property
    def denominator(self) -> int:
        return self._d

    def scaled(self, k: int) -> tuple[int, int, int, int] | None:
        """Integer coordinates of k*self, or None if they are not integral."""
        if any((n * k) % self._d for n in self._n):
            return None
        return tuple(n * k // self._d for n in self._n)

    # arithmetic ------------------------------------------------------------
    def __add__(self, other: "Quat") -> "Quat":
        if not isinstance(other, Quat):
            other = Quat(other)
        d1, d2 = self._d, other._d
        if d1 == d2:
            return Quat._raw(tuple(x + y for x, y in zip(self._n, other._n)), d1)
        return Quat._raw(tuple(x * d2 + y * d1 for x, y in zip(self._n, other._n)), d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "Quat":
        return Quat._raw(tuple(-x for x in self._n), self._d)

    def __sub__(self, other: "Quat") -> "Quat":
        if not isinstance(other, Quat):
            other = Quat(other)
        d1, d2 = self._d, other._d
        if d1 == d2:
            return Quat._raw(tuple(x - y for x, y in zip(self._n, other._n)), d1)
        return Quat._raw(tuple(x * d2 - y * d1 for x, y in zip(self._n, other._n)), d1 * d2)

    def __rsub__(self, other) -> "Quat":
        return Quat(other) - self

    def __mul__(self, other) -> "Quat":
        if isinstance(other, Quat):
            return quat_mul(self, other)
        if isinstance(other, ComplexScalar):
            return quat_mul(self, other.to_quat())
        f = Fraction(other)
        return Quat._raw(tuple(x * f.numerator for x in self._n), self._d * f.denominator)

    def __rmul__(self, other) -> "Quat":
        if isinstance(other, ComplexScalar):
            return quat_mul(other.to_quat(), self)
        f = Fraction(other)
        return Quat._raw(tuple(x * f.numerator for x in self._n), self._d * f.denominator)

    def __truediv__(self, other) -> "Quat":
        f = Fraction(other)
        return Quat._raw(tuple(x * f.denominator for x in self._n), self._d * f.numerator)

    def inverse(self) -> "Quat":
        n = norm(self)
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return conj(self) / n

    def is_zero(self) -> bool:
        return not any(self._n)

    def dot(self, other: "Quat") -> Fraction:
        """Euclidean (real) inner product of the coordinate 4-vectors."""
        s = sum(x * y for x, y in zip(self._n, other._n))
        return Fraction(s, self._d * other._d)

    # identity ----------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Quat):
            return self._d == other._d and self._n == other._n
        if isinstance(other, (int, Fraction)):
            return self == Quat(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._d))
        return self._hash

    def sort_key(self) -> tuple:
        if self._key is None:
            self._key = self.coords
        return self._key

    def __lt__(self, other: "Quat") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Quat({format_quat(self)})"

    def __str__(self) -> str:
        return format_quat(self)

    def to_json(self) -> list[int]:
        out = []
        for x in self.coords:
            out += [x.numerator, x.denominator]
        return out

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "Quat":
        data = list(data)
        if len(data) != 8:
            raise ValueError("quaternion JSON form needs 8 integers")
        return cls(*(Fraction(data[2 * t], data[2 * t + 1]) for t in range(4)))


def quat_mul(x: Quat, y: Quat) -> Quat:
    a1, b1, c1, d1 = x._n
    a2, b2, c2, d2 = y._n
    return Quat._raw(
        (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ),
        x._d * y._d,
    )


def conj(x: Quat) -> Quat:
    a, b, c, d = x._n
    return Quat._raw((a, -b, -c, -d), x._d)


def norm(x: Quat) -> Fraction:
    return Fraction(sum(n * n for n in x._n), x._d * x._d)


def real(x: Quat) -> Fraction:
    return x.a


@dataclass(frozen=True)
class ComplexScalar:
    """The complex number s + t*omega inside span(1, omega)."""

    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t", Fraction(self.t))

    def to_quat(self) -> Quat:
        half = self.t / 2
        return Quat(self.s - half, half, half, half)

    def __add__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.s + other.s, self.t + other.t)

    def __sub__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.s - other.s, self.t - other.t)

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.s, -self.t)

    def __mul__(self, other) -> "ComplexScalar":
        if isinstance(other, ComplexScalar):
            # omega^2 = -1 - omega
            s1, t1, s2, t2 = self.s, self.t, other.s, other.t
            return ComplexScalar(s1 * s2 - t1 * t2, s1 * t2 + t1 * s2 - t1 * t2)
        f = Fraction(other)
        return ComplexScalar(self.s * f, self.t * f)

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.s - self.t, -self.t)

    def abs2(self) -> Fraction:
        """Squared modulus; equals norm(self.to_quat())."""
        return self.s * self.s - self.s * self.t + self.t * self.t

    def inverse(self) -> "ComplexScalar":
        n = self.abs2()
        if n == 0:
            raise ZeroDivisionError("zero complex scalar")
        return self.conjugate() * (1 / n)

    def __truediv__(self, other: "ComplexScalar") -> "ComplexScalar":
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.s == 0 and self.t == 0

    def __str__(self) -> str:
        t = str(self.t)
        return f"{self.s}{t if t.startswith('-') else '+' + t}w"


ZERO = Quat(0)
ONE = Quat(1)
I = Quat(0, 1)
J = Quat(0, 0, 1)
K = Quat(0, 0, 0, 1)
OMEGA = Quat.from_halves(-1, 1, 1, 1)
ZETA = Quat.from_halves(1, 1, 1, 1)

# zeta = 1 + omega; its powers as complex scalars
_ZETA_SCALARS = [ComplexScalar(1, 0)]
for _ in range(5):
    _ZETA_SCALARS.append(_ZETA_SCALARS[-1] * ComplexScalar(1, 1))
_ZETA_QUATS = [z.to_quat() for z in _ZETA_SCALARS]


def zeta_scalar(l: int) -> ComplexScalar:
    return _ZETA_SCALARS[l % 6]


def zeta_pow(l: int) -> Quat:
    """zeta**l as a quaternion; the exponent is read mod 6."""
    return _ZETA_QUATS[l % 6]


def proj_C(x: Quat) -> ComplexScalar:
    """Orthogonal projection of x onto span(1, omega).

    The (i+j+k)-component of x is (b+c+d)/3 per axis, so the projection
    is a + u(i+j+k) with u = (b+c+d)/3, i.e. s = a + u and t = 2u.
    """
    u = (x.b + x.c + x.d) / 3
    return ComplexScalar(x.a + u, 2 * u)


def herm(x: Quat, y: Quat) -> ComplexScalar:
    """Hermitian form on H_omega: conjugate-linear in x, right-linear in y."""
    return proj_C(quat_mul(conj(x), y))


def _fmt_coeff(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_quat(x: Quat) -> str:
    """Canonical text form ``a+bi+cj+dk``; every coefficient is written."""
    a, b, c, d = x.coords
    out = _fmt_coeff(a)
    for f, unit in ((b, "i"), (c, "j"), (d, "k")):
        s = _fmt_coeff(f)
        out += (s if s.startswith("-") else "+" + s) + unit
    return out


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*([ijk]?)")


def parse_quat(text: str) -> Quat:
    """Parse the canonical text form (also accepts omitted terms and unit 1)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty quaternion text")
    coeffs = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and not m.group(3)):
            raise ValueError(f"cannot parse quaternion: {text!r}")
        sign, num, unit = m.groups()
        val = Fraction(num) if num else Fraction(1)
        coeffs[unit] += -val if sign == "-" else val
        pos = m.end()
    return Quat(coeffs[""], coeffs["i"], coeffs["j"], coeffs["k"])
