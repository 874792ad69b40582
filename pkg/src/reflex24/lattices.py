"""The root system Phi, the Hurwitz lattice and its D4 and 2*Lambda sublattices."""
from __future__ import annotations

import enum
import itertools
import math
from fractions import Fraction

from .hquat import I, J, K, ONE, Quat, quat_mul, zeta_pow

LINE_LABELS = ("1", "i", "j", "k")
LINE_QUATS = {"1": ONE, "i": I, "j": J, "k": K}


class LatticeTag(str, enum.Enum):
    Lambda = "Lambda"
    LambdaD4 = "LambdaD4"
    TwoLambda = "TwoLambda"


class VertexClass(str, enum.Enum):
    CellCenter = "CellCenter"
    Vertex = "Vertex"
    Neither = "Neither"


def _build_phi() -> tuple[Quat, ...]:
    units = []
    for u in (ONE, I, J, K):
        units += [u, -u]
    halves = [Quat.from_halves(*signs)
              for signs in itertools.product((1, -1), repeat=4)]
    return tuple(units + halves)


PHI: tuple[Quat, ...] = _build_phi()
PHI_SET = frozenset(PHI)


def _hurwitz_halves(x: Quat):
    h = x.scaled(2)
    if h is None:
        return None
    parity = {n % 2 for n in h}
    return h if len(parity) == 1 else None


def in_lattice(x: Quat, tag: LatticeTag | str) -> bool:
    tag = LatticeTag(tag)
    if tag is LatticeTag.Lambda:
        return _hurwitz_halves(x) is not None
    if tag is LatticeTag.LambdaD4:
        return x.denominator == 1 and sum(x.numerators) % 2 == 0
    # x in 2*Lambda  <=>  x/2 in Lambda  <=>  x integral with all coords of one parity
    return x.denominator == 1 and len({n % 2 for n in x.numerators}) == 1


_ORDER = {LatticeTag.TwoLambda: 0, LatticeTag.LambdaD4: 1, LatticeTag.Lambda: 2}


def coset_index(sub: LatticeTag | str, sup: LatticeTag | str) -> int:
    """Index [sup : sub], counted inside the fundamental box [0, 2)^4 of 2*Z^4."""
    sub, sup = LatticeTag(sub), LatticeTag(sup)
    if _ORDER[sub] > _ORDER[sup]:
        raise ValueError(f"{sub.value} is not a sublattice of {sup.value}")
    # 2*Z^4 lies in all three lattices, so the box is a common fundamental domain
    box = [Quat.from_halves(*h) for h in itertools.product(range(4), repeat=4)]
    n_sup = sum(in_lattice(x, sup) for x in box)
    n_sub = sum(in_lattice(x, sub) for x in box)
    assert n_sup % n_sub == 0
    return n_sup // n_sub


_DECOMP = {}
for _lab in LINE_LABELS:
    for _l in range(6):
        _DECOMP[quat_mul(LINE_QUATS[_lab], zeta_pow(_l))] = (_lab, _l)


def phi_decompose(x: Quat) -> tuple[str, int]:
    """Return (q, l) with x = q * zeta**l and q one of 1, i, j, k."""
    try:
        return _DECOMP[x]
    except KeyError:
        raise ValueError(f"{x} is not in Phi") from None


def line_label(x: Quat) -> str:
    return phi_decompose(x)[0]


def phi_label(x: Quat) -> str:
    """Human label such as '1', 'zeta^2', '-k' or 'j zeta^4'."""
    q, l = phi_decompose(x)
    if l == 0:
        return q
    if l == 3:
        return "-" + q
    z = "zeta" if l == 1 else f"zeta^{l}"
    return z if q == "1" else f"{q}{z}"


def vertex_class(x: Quat) -> VertexClass:
    if in_lattice(x, LatticeTag.LambdaD4):
        return VertexClass.CellCenter
    if in_lattice(x, LatticeTag.Lambda):
        return VertexClass.Vertex
    return VertexClass.Neither


def lattice_points(tag: LatticeTag | str, radius_sq) -> list[Quat]:
    """All points of the lattice with norm <= radius_sq, in sorted order."""
    r2 = Fraction(radius_sq)
    bound = math.isqrt(int(4 * r2)) + 1
    out = []
    for h in itertools.product(range(-bound, bound + 1), repeat=4):
        if sum(t * t for t in h) > 4 * r2:
            continue
        x = Quat.from_halves(*h)
        if in_lattice(x, tag):
            out.append(x)
    out.sort()
    return out


def phi_json() -> list[dict]:
    return [
        {"quat": x.to_json(), "text": str(x), "line": phi_decompose(x)[0],
         "zeta_power": phi_decompose(x)[1], "label": phi_label(x)}
        for x in PHI
    ]
