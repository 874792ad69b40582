"""The 24-cell, the complement complexes K0 and K, and their vertex links."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import linalg
from .arrangement import FACET_CENTERS, FAMILY_EQUATIONS, Window
from .graphs import MetricGraph
from .hquat import ZERO, Quat, norm
from .lattices import PHI, LatticeTag, in_lattice, lattice_points, line_label

# squared distance from a facet center to the six vertices of its octahedron;
# pinned by test_octahedron_radius against a brute-force scan of the central cell
OCTAHEDRON_RADIUS_SQ = Fraction(1, 2)


@dataclass(frozen=True)
class Polytope24:
    center: Quat
    vertices: tuple
    edges: tuple
    triangles: tuple
    octahedra: tuple  # (facet center, 6 sorted vertex indices)

    @property
    def f_vector(self) -> tuple[int, int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.triangles), len(self.octahedra))


@lru_cache(maxsize=None)
def _unit_cell():
    verts = PHI
    edges = [(a, b) for a, b in itertools.combinations(range(24), 2)
             if norm(verts[a] - verts[b]) == 1]
    adj = {t: set() for t in range(24)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    tris = [(a, b, c) for a, b in edges for c in adj[a] & adj[b] if c > b]
    octs = []
    for f in FACET_CENTERS:
        members = tuple(t for t in range(24) if norm(verts[t] - f) == OCTAHEDRON_RADIUS_SQ)
        octs.append((f, members))
    return tuple(edges), tuple(sorted(tris)), tuple(octs)


def build_24cell(center: Quat = ZERO) -> Polytope24:
    """The Voronoi cell of Lambda_D4 about center, with its face lattice."""
    edges, tris, octs = _unit_cell()
    verts = tuple(center + u for u in PHI)
    octahedra = tuple((center + f, m) for f, m in octs)
    return Polytope24(center, verts, edges, tris, octahedra)


def triangle_included(rel: tuple[Quat, Quat, Quat]) -> bool:
    """K0 rule: keep a face unless its vertices lie on three distinct complex lines."""
    return len({line_label(x) for x in rel}) < 3


def k0_triangles(p: Polytope24) -> list[tuple[int, int, int]]:
    return [t for t in p.triangles
            if triangle_included(tuple(p.vertices[x] - p.center for x in t))]


def _link(vertex, edges, triangles) -> MetricGraph:
    nodes = sorted({b for e in edges if vertex in e for b in e if b != vertex})
    link_edges = [tuple(x for x in t if x != vertex) for t in triangles if vertex in t]
    return MetricGraph.from_edges(link_edges, nodes)


def k0_link(p: Polytope24, vertex: int) -> MetricGraph:
    if not 0 <= vertex < len(p.vertices):
        raise IndexError(vertex)
    return _link(vertex, p.edges, k0_triangles(p))


# --- exact incidence with the arrangement -------------------------------------

def _family_values(x: Quat, family: str) -> tuple[Fraction, Fraction]:
    rl, rm = FAMILY_EQUATIONS[family]
    cs = x.coords
    return (sum((a * c for a, c in zip(rl, cs)), Fraction(0)),
            sum((a * c for a, c in zip(rm, cs)), Fraction(0)))


def on_arrangement(x: Quat) -> bool:
    """True iff x lies on some fixed hyperplane of Refl(G4~)."""
    for fam in FAMILY_EQUATIONS:
        l, m = _family_values(x, fam)
        if l.denominator == 1 and m.denominator == 1 and (l + m) % 2 == 0:
            return True
    return False


def simplex_meets_plane(points: tuple[Quat, ...], family: str, l: int, m: int) -> bool:
    """Exact test whether the closed simplex on points meets {row_l.x=l, row_m.x=m}.

    Barycentric form x = p0 + sum s_k (p_k - p0), s_k >= 0, sum s_k <= 1.
    """
    p0 = points[0]
    dirs = [p - p0 for p in points[1:]]
    vl0, vm0 = _family_values(p0, family)
    dl = [_family_values(d, family)[0] for d in dirs]
    dm = [_family_values(d, family)[1] for d in dirs]
    n = len(dirs)
    if n == 0:
        return vl0 == l and vm0 == m
    if n == 2:
        det = dl[0] * dm[1] - dl[1] * dm[0]
        if det != 0:
            rl, rm = l - vl0, m - vm0
            s = (rl * dm[1] - dl[1] * rm) / det
            t = (dl[0] * rm - rl * dm[0]) / det
            return s >= 0 and t >= 0 and s + t <= 1
    ineqs = [(dl, l - vl0), ([-x for x in dl], vl0 - l),
             (dm, m - vm0), ([-x for x in dm], vm0 - m),
             ([1] * n, Fraction(1))]
    for k in range(n):
        row = [0] * n
        row[k] = -1
        ineqs.append((row, Fraction(0)))
    return linalg.fm_feasible(ineqs)


def simplex_hits_arrangement(points: tuple[Quat, ...]) -> list[tuple[str, int, int]]:
    """All realizable hyperplanes meeting the simplex (candidates from value ranges)."""
    hits = []
    for fam in FAMILY_EQUATIONS:
        vals = [_family_values(p, fam) for p in points]
        lo_l, hi_l = min(v[0] for v in vals), max(v[0] for v in vals)
        lo_m, hi_m = min(v[1] for v in vals), max(v[1] for v in vals)
        for l in range(_ceil(lo_l), _floor(hi_l) + 1):
            for m in range(_ceil(lo_m), _floor(hi_m) + 1):
                if (l + m) % 2 == 0 and simplex_meets_plane(points, fam, l, m):
                    hits.append((fam, l, m))
    return hits


def _floor(f: Fraction) -> int:
    return f.numerator // f.denominator


def _ceil(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


# --- the global complex K -----------------------------------------------------

@dataclass
class CellComplex2:
    vertices: list
    edges: list
    triangles: list
    # bookkeeping for the windowed Voronoi structure
    centers: list = field(default_factory=list)
    removed_triangles: list = field(default_factory=list)
    index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = {v: t for t, v in enumerate(self.vertices)}

    def vertex_id(self, x: Quat) -> int:
        return self.index[x]

    def coords(self, simplex) -> tuple[Quat, ...]:
        return tuple(self.vertices[t] for t in simplex)

    def check_invariants(self) -> list[str]:
        problems = []
        eset = set(self.edges)
        for a, b in self.edges:
            if norm(self.vertices[a] - self.vertices[b]) != 1:
                problems.append(f"edge {a}-{b} is not of length 1")
        for t in self.triangles:
            for a, b in itertools.combinations(t, 2):
                if (min(a, b), max(a, b)) not in eset:
                    problems.append(f"triangle {t} misses edge {a}-{b}")
        if len(set(self.triangles)) != len(self.triangles) or len(eset) != len(self.edges):
            problems.append("duplicate simplices")
        return problems

    def to_json(self) -> dict:
        return {
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "triangles": [list(t) for t in self.triangles],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CellComplex2":
        return cls([Quat.from_json(v) for v in data["vertices"]],
                   [tuple(e) for e in data["edges"]],
                   [tuple(t) for t in data["triangles"]])


class InconsistentGluing(RuntimeError):
    pass


def build_K(w: Window) -> CellComplex2:
    """Union of translated K0's over the cell centers v in Lambda_D4 with norm(v) <= radius_sq."""
    centers = lattice_points(LatticeTag.LambdaD4, w.radius_sq)
    index: dict[Quat, int] = {}
    verts: list[Quat] = []

    def vid(x):
        if x not in index:
            index[x] = len(verts)
            verts.append(x)
        return index[x]

    edges = set()
    decision: dict[tuple, bool] = {}
    for c in centers:
        p = build_24cell(c)
        ids = [vid(x) for x in p.vertices]
        for a, b in p.edges:
            edges.add(tuple(sorted((ids[a], ids[b]))))
        keep = set(k0_triangles(p))
        for t in p.triangles:
            key = tuple(sorted(ids[x] for x in t))
            inc = t in keep
            if decision.setdefault(key, inc) != inc:
                raise InconsistentGluing(f"cells disagree on triangle {key}")
    tris = sorted(k for k, inc in decision.items() if inc)
    removed = sorted(k for k, inc in decision.items() if not inc)
    return CellComplex2(verts, sorted(edges), tris, centers, removed, dict(index))


def incident_centers(x: Quat) -> list[Quat]:
    """Centers of the 8 Voronoi cells having x as a vertex."""
    return sorted(x - u for u in PHI if in_lattice(x - u, LatticeTag.LambdaD4))


def is_interior(K: CellComplex2, vertex: int) -> bool:
    cs = set(K.centers)
    return all(c in cs for c in incident_centers(K.vertices[vertex]))


def interior_vertices(K: CellComplex2) -> list[int]:
    return [t for t in range(len(K.vertices)) if is_interior(K, t)]


class BoundaryVertex(ValueError):
    pass


def link_in_K(K: CellComplex2, vertex: int) -> MetricGraph:
    if not is_interior(K, vertex):
        raise BoundaryVertex(f"vertex {K.vertices[vertex]} does not have a complete star")
    return _link(vertex, K.edges, [t for t in K.triangles if vertex in t])


def full_voronoi_link(K: CellComplex2, vertex: int) -> MetricGraph:
    """Link in the full Voronoi 2-skeleton (kept and removed triangles)."""
    if not is_interior(K, vertex):
        raise BoundaryVertex(f"vertex {K.vertices[vertex]} does not have a complete star")
    tris = [t for t in K.triangles + K.removed_triangles if vertex in t]
    return _link(vertex, K.edges, tris)


def removed_link_edges(K: CellComplex2, vertex: int) -> list[tuple[int, int, int]]:
    """Removed triangles at vertex; each one is a link edge missing from K."""
    return [t for t in K.removed_triangles if vertex in t]


def centroid(points) -> Quat:
    total = ZERO
    for p in points:
        total = total + p
    return total / len(points)


# --- lens diagram data ----------------------------------------------------------

LENS_START = Quat(0, Fraction(1, 2), 0, Fraction(-1, 2))  # (i-k)/2


@dataclass
class Lens:
    index: int
    center: Quat
    octahedron: tuple
    front: tuple
    back: tuple


@dataclass
class LensTable:
    boundary: tuple   # the hexagon 1<zeta> shared by every lens
    lenses: list
    vertex_roles: dict   # Quat -> list of (lens, role)
    octahedron_roles: dict   # facet center -> list of (lens, role)


def lens_assignment() -> LensTable:
    """Six lenses around the great circle through 1C.

    Lens n is centered at the octahedron (i-k)/2 * zeta^n. Its front
    hemisphere carries the vertices it shares with lens n+1, its back
    hemisphere those shared with lens n-1.
    """
    from .hquat import zeta_pow
    cell = build_24cell()
    octs = {f: frozenset(cell.vertices[t] for t in members) for f, members in cell.octahedra}
    boundary = tuple(zeta_pow(l) for l in range(6))
    centers = [LENS_START * zeta_pow(n) for n in range(6)]
    lenses = []
    for n, c in enumerate(centers):
        nxt, prv = octs[centers[(n + 1) % 6]], octs[centers[(n - 1) % 6]]
        front = tuple(sorted(octs[c] & nxt))
        back = tuple(sorted(octs[c] & prv))
        lenses.append(Lens(n, c, tuple(sorted(octs[c])), front, back))

    vroles: dict[Quat, list] = {x: [] for x in PHI}
    for x in boundary:
        vroles[x] = [(n, "boundary") for n in range(6)]
    for lens in lenses:
        for x in lens.front:
            vroles[x].append((lens.index, "front"))
        for x in lens.back:
            vroles[x].append((lens.index, "back"))

    oroles: dict[Quat, list] = {f: [] for f in octs}
    for lens in lenses:
        oroles[lens.center].append((lens.index, "center"))
    hemis = {lens.index: set(lens.front) | set(boundary) for lens in lenses}
    for f, verts in octs.items():
        if oroles[f]:
            continue
        # a half octahedron: its square lies in a hemisphere, apexes on either side
        for n, hemi in hemis.items():
            if len(verts & hemi) >= 4:
                oroles[f] += [(n, "half-front"), ((n + 1) % 6, "half-back")]
    return LensTable(boundary, lenses, vroles, oroles)
