"""The reflection arrangement of Refl(G4~): hyperplanes as integer triples."""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .hquat import Quat
from .isometry import EuclideanMap, FixedKind, IsometryClass, classify, fixed_set
from .lattices import LINE_LABELS, PHI, LatticeTag, in_lattice

# (l-row, m-row) per family; each plane is {x : row_l . x = l, row_m . x = m}
FAMILY_EQUATIONS = {
    "1": ((1, 0, 0, 0), (0, 1, 1, 1)),
    "i": ((0, 1, 0, 0), (1, 0, 1, -1)),
    "j": ((0, 0, 1, 0), (1, -1, 0, 1)),
    "k": ((0, 0, 0, 1), (1, 1, -1, 0)),
}

# facet centers of the 24-cell about the origin: (i-j)/2 * Phi
FACET_CENTERS = tuple(sorted({Quat(0, Fraction(1, 2), Fraction(-1, 2)) * u for u in PHI}))


def _dot(row, x: Quat) -> Fraction:
    return sum((r * c for r, c in zip(row, x.coords)), Fraction(0))


@dataclass(frozen=True, order=True)
class Hyperplane:
    family: str
    l: int
    m: int

    def __post_init__(self):
        if self.family not in FAMILY_EQUATIONS:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def equations(self):
        rl, rm = FAMILY_EQUATIONS[self.family]
        return (rl, self.l), (rm, self.m)

    def contains(self, x: Quat) -> bool:
        return all(_dot(row, x) == rhs for row, rhs in self.equations)

    def is_realizable(self) -> bool:
        return (self.l + self.m) % 2 == 0

    def parametric(self) -> tuple[Quat, Quat, Quat]:
        """(point, d1, d2) with the plane equal to point + span_R(d1, d2)."""
        (rl, l), (rm, m) = self.equations
        x, kernel = linalg.solve_affine([rl, rm], [l, m])
        return Quat(*x), Quat(*kernel[0]), Quat(*kernel[1])

    def distance_sq(self, center: Optional[Quat] = None) -> Fraction:
        """Squared euclidean distance from center (default origin) to the plane."""
        (rl, l), (rm, m) = self.equations
        if center is not None:
            l, m = l - _dot(rl, center), m - _dot(rm, center)
        g11 = sum(a * a for a in rl)
        g22 = sum(a * a for a in rm)
        g12 = sum(a * b for a, b in zip(rl, rm))
        det = g11 * g22 - g12 * g12
        return Fraction(g22 * l * l - 2 * g12 * l * m + g11 * m * m, det)

    def to_json(self):
        return [self.family, self.l, self.m]

    def __str__(self):
        return f"H({self.family}; {self.l}, {self.m})"


@dataclass(frozen=True)
class Window:
    radius_sq: Fraction

    def __init__(self, radius_sq):
        object.__setattr__(self, "radius_sq", Fraction(radius_sq))
        if self.radius_sq < 0:
            raise ValueError("radius_sq must be nonnegative")


def witness(h: Hyperplane) -> Quat:
    """A Lambda_D4 point on h (exists exactly when l + m is even)."""
    if not h.is_realizable():
        raise ValueError(f"{h} has no Lambda_D4 point")
    l, m = h.l, h.m
    return {
        "1": Quat(l, m, 0, 0),
        "i": Quat(m, l, 0, 0),
        "j": Quat(m, 0, l, 0),
        "k": Quat(m, 0, 0, l),
    }[h.family]


def hyperplane_of(r: EuclideanMap) -> Hyperplane:
    """The (family, l, m) triple of a reflection in Refl(G4~)."""
    from .groups import generate_G4, membership
    if classify(r) is not IsometryClass.Reflection or not membership(r):
        raise ValueError(f"{r} is not a reflection of the group")
    label = generate_G4().label(r.linear)
    family = label.split("_")[1].split("^")[0]
    fs = fixed_set(r)
    assert fs.kind is FixedKind.ComplexLine
    (rl, _), (rm, _) = Hyperplane(family, 0, 0).equations
    l, m = _dot(rl, fs.basepoint), _dot(rm, fs.basepoint)
    if l.denominator != 1 or m.denominator != 1:
        raise ValueError(f"{r} has non-integral hyperplane parameters")
    h = Hyperplane(family, int(l), int(m))
    # the two equations must cut out exactly the fixed line
    d = fs.direction
    if not (h.contains(fs.basepoint) and h.contains(fs.basepoint + d)
            and h.contains(fs.basepoint + d * Quat.from_halves(-1, 1, 1, 1))):
        raise ArithmeticError(f"equations of {h} do not vanish on Fix({r})")
    return h


def enumerate_hyperplanes(w: Window) -> list[Hyperplane]:
    """All realizable hyperplanes within squared distance w.radius_sq of 0."""
    out = []
    for fam in LINE_LABELS:
        probe = Hyperplane(fam, 0, 0)
        (rl, _), (rm, _) = probe.equations
        # each equation alone bounds its parameter by |row| * radius
        lb = math.isqrt(int(w.radius_sq * sum(a * a for a in rl))) + 1
        mb = math.isqrt(int(w.radius_sq * sum(a * a for a in rm))) + 1
        for l in range(-lb, lb + 1):
            for m in range(-mb, mb + 1):
                h = Hyperplane(fam, l, m)
                if h.is_realizable() and h.distance_sq() <= w.radius_sq:
                    out.append(h)
    return sorted(out)


class IntersectKind(str, enum.Enum):
    Point = "Point"
    SamePlane = "SamePlane"
    Disjoint = "Disjoint"


@dataclass(frozen=True)
class Intersection:
    kind: IntersectKind
    point: Optional[Quat] = None


def intersect(h1: Hyperplane, h2: Hyperplane) -> Intersection:
    rows, rhs = [], []
    for h in (h1, h2):
        for row, val in h.equations:
            rows.append(row)
            rhs.append(val)
    sol = linalg.solve_affine(rows, rhs)
    if sol is None:
        return Intersection(IntersectKind.Disjoint)
    x, kernel = sol
    if not kernel:
        return Intersection(IntersectKind.Point, Quat(*x))
    if len(kernel) == 2:
        return Intersection(IntersectKind.SamePlane)
    # two distinct complex lines meet in a point or not at all
    raise ArithmeticError(f"{h1} and {h2} meet in a {len(kernel)}-dimensional set")


@dataclass
class IntersectionReport:
    radius_sq: Fraction
    n_hyperplanes: int
    points: dict  # Quat -> number of hyperplanes through it
    non_lattice: list
    missing: list

    @property
    def ok(self) -> bool:
        return not self.non_lattice and not self.missing


def verify_intersection_points(w: Window) -> IntersectionReport:
    planes = enumerate_hyperplanes(w)
    incident: dict[Quat, set] = {}
    for h1, h2 in itertools.combinations(planes, 2):
        if h1.family == h2.family:
            continue
        res = intersect(h1, h2)
        incident.setdefault(res.point, set()).update((h1, h2))
    from .lattices import lattice_points
    expected = lattice_points(LatticeTag.LambdaD4, w.radius_sq)
    return IntersectionReport(
        radius_sq=w.radius_sq,
        n_hyperplanes=len(planes),
        points={p: len(hs) for p, hs in sorted(incident.items())},
        non_lattice=[p for p in incident if not in_lattice(p, LatticeTag.LambdaD4)],
        missing=[p for p in expected if p not in incident],
    )


class Incidence(str, enum.Enum):
    Misses = "Misses"
    ThroughCenter = "ThroughCenter"
    Violation = "Violation"


def meets_24cell(h: Hyperplane, center: Quat) -> bool:
    """Exact test whether h meets the closed 24-cell about center.

    Substitutes point + s*d1 + t*d2 into the 24 facet inequalities
    <x - center, f> <= |f|^2 and eliminates s, t by Fourier-Motzkin.
    """
    # the 24-cell lies in the unit ball about its center
    if h.distance_sq(center) > 1:
        return False
    p, d1, d2 = h.parametric()
    base = p - center
    ineqs = []
    for f in FACET_CENTERS:
        nf = f.dot(f)
        ineqs.append(([d1.dot(f), d2.dot(f)], nf - base.dot(f)))
    return linalg.fm_feasible(ineqs)


def cell_incidence_check(h: Hyperplane, center: Quat) -> Incidence:
    if not in_lattice(center, LatticeTag.LambdaD4):
        raise ValueError(f"{center} is not a cell center")
    if not meets_24cell(h, center):
        return Incidence.Misses
    return Incidence.ThroughCenter if h.contains(center) else Incidence.Violation


@dataclass
class IncidenceReport:
    radius_sq: Fraction
    counts: dict
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_cell_incidence(w: Window) -> IncidenceReport:
    from .lattices import lattice_points
    planes = enumerate_hyperplanes(w)
    centers = lattice_points(LatticeTag.LambdaD4, w.radius_sq)
    counts = {k.value: 0 for k in Incidence}
    violations = []
    for c in centers:
        for h in planes:
            res = cell_incidence_check(h, c)
            counts[res.value] += 1
            if res is Incidence.Violation:
                violations.append((h, c))
    return IncidenceReport(w.radius_sq, counts, violations)
