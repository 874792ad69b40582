"""Quotient complexes, their presentations, coset enumeration and abelianization."""
from __future__ import annotations

import itertools
import re
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complexes import CellComplex2, build_24cell, build_K, incident_centers, k0_triangles
from .arrangement import Window
from .groups import generate_G4
from .hquat import ZETA, Quat, quat_mul
from .isometry import EuclideanMap, apply, compose, translation
from .lattices import PHI, PHI_SET, LatticeTag, in_lattice

Word = tuple[int, ...]  # signed 1-based generator indices; -g is the inverse of g


@dataclass
class Presentation:
    generators: list[str]
    relators: list[Word]

    def __post_init__(self):
        n = len(self.generators)
        for w in self.relators:
            if not w:
                raise ValueError("relators must be nonempty")
            if any(x == 0 or abs(x) > n for x in w):
                raise ValueError(f"relator {w} uses an undeclared generator")

    def word_str(self, w: Word) -> str:
        return "".join(self.generators[x - 1] if x > 0 else self.generators[-x - 1].upper()
                       for x in w)

    def __str__(self) -> str:
        return f"<{','.join(self.generators)} | {', '.join(self.word_str(w) for w in self.relators)}>"


_LETTER = re.compile(r"([A-Za-z])(\^-1)?")


def parse_presentation(relators: str, generators: Optional[Sequence[str]] = None) -> Presentation:
    """Parse 'abd,bcd,cad' style relators; an uppercase letter or x^-1 is an inverse."""
    words_txt = [w.strip() for w in relators.split(",") if w.strip()]
    if not words_txt:
        raise ValueError("no relators given")
    letters = []
    parsed = []
    for txt in words_txt:
        word = []
        pos = 0
        compact = txt.replace(" ", "")
        while pos < len(compact):
            m = _LETTER.match(compact, pos)
            if not m:
                raise ValueError(f"cannot parse relator {txt!r}")
            ch, inv = m.groups()
            base = ch.lower()
            sign = -1 if (ch.isupper()) != bool(inv) else 1
            word.append((base, sign))
            if base not in letters:
                letters.append(base)
            pos = m.end()
        parsed.append(word)
    gens = list(generators) if generators is not None else sorted(letters)
    missing = set(letters) - set(gens)
    if missing:
        raise ValueError(f"undeclared generators {sorted(missing)}")
    idx = {g: t + 1 for t, g in enumerate(gens)}
    return Presentation(gens, [tuple(s * idx[b] for b, s in w) for w in parsed])


def invert_word(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Sequence[int]) -> Word:
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = list(free_reduce(w))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def canonical_relator(w: Word) -> Word:
    """Minimum over cyclic rotations of w and of its inverse."""
    w = cyclic_reduce(w)
    cands = []
    for v in (w, invert_word(w)):
        cands += [v[t:] + v[:t] for t in range(len(v))]
    return min(cands) if cands else ()


def relator_multiset(p: Presentation) -> tuple:
    return tuple(sorted(canonical_relator(w) for w in p.relators))


def equivalent_presentations(p1: Presentation, p2: Presentation) -> Optional[dict]:
    """Find a generator relabeling with sign flips matching the relator multisets.

    Returns {generator of p1: (generator of p2, sign)} or None.
    """
    n = len(p1.generators)
    if n != len(p2.generators) or len(p1.relators) != len(p2.relators):
        return None
    target = relator_multiset(p2)
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            def sub(x):
                g = perm[abs(x) - 1] * signs[abs(x) - 1]
                return g if x > 0 else -g
            mapped = tuple(sorted(canonical_relator(tuple(sub(x) for x in w)) for w in p1.relators))
            if mapped == target:
                return {p1.generators[t]: (p2.generators[perm[t] - 1], signs[t]) for t in range(n)}
    return None


def eliminate_generator(p: Presentation, gen: str) -> Presentation:
    """Solve one relator for gen (occurring once) and substitute it elsewhere."""
    g = p.generators.index(gen) + 1
    for t, w in enumerate(p.relators):
        if sum(1 for x in w if abs(x) == g) == 1:
            break
    else:
        raise ValueError(f"no relator contains {gen} exactly once")
    w = p.relators[t]
    pos = next(k for k, x in enumerate(w) if abs(x) == g)
    # rotate so gen^(+-1) comes first: gen^s * rest = 1  =>  gen = rest^(-s)
    rot = w[pos:] + w[:pos]
    rest = rot[1:]
    value = invert_word(rest) if rot[0] > 0 else rest
    new_gens = [x for x in p.generators if x != gen]
    renum = {old + 1: new_gens.index(name) + 1 for old, name in enumerate(p.generators) if name != gen}

    def subst(word):
        out = []
        for x in word:
            if abs(x) == g:
                out += list(value if x > 0 else invert_word(value))
            else:
                out.append(x)
        return tuple((renum[x] if x > 0 else -renum[-x]) for x in cyclic_reduce(out))

    rels = [subst(v) for k, v in enumerate(p.relators) if k != t]
    return Presentation(new_gens, [r for r in rels if r])


# --- orbits and quotients -----------------------------------------------------

def _reduce_two_lambda(x: Quat) -> Quat:
    """Representative of x + 2*Lambda in a fixed box (works for x in Lambda)."""
    h = x.scaled(2)
    if h is None:
        raise ValueError(f"{x} is not in Lambda/2")
    # 2*Lambda in half-units is 4*Z^4 together with (2,2,2,2) + 4*Z^4
    a = tuple(t % 4 for t in h)
    b = tuple((t + 2) % 4 for t in h)
    return Quat.from_halves(*min(a, b))


class Action:
    """Canonical forms for simplices under a group acting on Lambda.

    Keys are half-integer coordinates scaled by 2, which preserves order.
    """

    def anchors(self, u: Quat) -> tuple[Quat, list[EuclideanMap]]:
        raise NotImplementedError

    def vertex_key(self, u: Quat):
        return self.anchors(u)[0].scaled(2)

    def images(self, u: Quat, x: Quat) -> list:
        """Sort keys of h(x) for every h carrying u to its base point."""
        memo = self.__dict__.setdefault("_images", {})
        key = (u, x)
        if key not in memo:
            memo[key] = [apply(h, x).scaled(2) for h in self.anchors(u)[1]]
        return memo[key]

    def oriented_edge_key(self, u: Quat, w: Quat):
        return (self.anchors(u)[0].scaled(2), min(self.images(u, w)))

    def triangle_key(self, tri: Sequence[Quat]):
        best = None
        for u in tri:
            base = self.anchors(u)[0].scaled(2)
            x, y = [p for p in tri if p != u]
            for kx, ky in zip(self.images(u, x), self.images(u, y)):
                k = (base,) + tuple(sorted((kx, ky)))
                if best is None or k < best:
                    best = k
        return best


class FiniteLinearAction(Action):
    """Refl(G4) acting on the 24-cell about the origin."""

    def __init__(self):
        self.elements = generate_G4().elements

    def anchors(self, u):
        images = [(apply(g, u), g) for g in self.elements]
        base = min(x for x, _ in images)
        return base, [g for x, g in images if x == base]


class AffineAction(Action):
    """Refl(G4~) = 2*Lambda x| Refl(G4) acting on H."""

    def __init__(self):
        self.elements = generate_G4().elements
        self._cache = {}

    def anchors(self, u):
        if u in self._cache:
            return self._cache[u]
        images = [(_reduce_two_lambda(apply(g, u)), g) for g in self.elements]
        base = min(x for x, _ in images)
        hs = []
        for x, g in images:
            if x == base:
                shift = base - apply(g, u)
                assert in_lattice(shift, LatticeTag.TwoLambda)
                hs.append(compose(translation(shift), g))
        self._cache[u] = (base, hs)
        return base, hs


@dataclass
class QuotientComplex:
    n_vertices: int
    n_edges: int
    n_triangles: int
    edge_labels: list[str]
    edge_keys: list  # preferred oriented key per edge orbit
    arrow_orbits: list[bool]
    triangle_words: list[Word]
    triangle_reps: list = field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.n_vertices, self.n_edges, self.n_triangles)


def _is_arrow(u: Quat, w: Quat, centers) -> bool:
    """w - c = (u - c)*zeta for some cell center c containing both."""
    for c in centers(u):
        a, b = u - c, w - c
        if b not in PHI_SET:
            continue
        if a in PHI_SET and b in PHI_SET and quat_mul(a, ZETA) == b:
            return True
    return False


@lru_cache(maxsize=None)
def _cells_of(u: Quat) -> tuple:
    return tuple(incident_centers(u))


class OrientationConflict(RuntimeError):
    pass


def quotient(K: CellComplex2, which: str) -> QuotientComplex:
    """Orbit counts and triangle boundary words of K modulo the group.

    which is 'K0' (Refl(G4) on the 24-cell) or 'K' (Refl(G4~) on the tiling).
    """
    if which == "K0":
        action: Action = FiniteLinearAction()
        centers = lambda u: [Quat(0)]
    elif which == "K":
        action = AffineAction()
        centers = _cells_of
    else:
        raise ValueError(f"unknown quotient {which!r}")
    V = K.vertices

    vkeys = {action.vertex_key(x) for x in V}

    # edge orbits with a preferred orientation
    orbit_pref = {}
    orbit_arrow = {}
    for a, b in K.edges:
        u, w = V[a], V[b]
        k1, k2 = action.oriented_edge_key(u, w), action.oriented_edge_key(w, u)
        if k1 == k2:
            raise OrientationConflict(f"edge {u}--{w} is inverted by the group")
        okey = min(k1, k2)
        fwd, bwd = _is_arrow(u, w, centers), _is_arrow(w, u, centers)
        if fwd and bwd:
            raise OrientationConflict(f"edge {u}--{w} is an arrow both ways")
        if fwd or bwd:
            pref = k1 if fwd else k2
        else:
            pref = okey
        if orbit_pref.setdefault(okey, pref) != pref:
            raise OrientationConflict(f"arrow orientation is not invariant on {u}--{w}")
        orbit_arrow[okey] = fwd or bwd

    okeys = sorted(orbit_pref, key=lambda k: (orbit_arrow[k], k))
    names = _edge_names(len(okeys))
    edge_id = {k: t + 1 for t, k in enumerate(okeys)}

    def letter(u, w):
        k1, k2 = action.oriented_edge_key(u, w), action.oriented_edge_key(w, u)
        okey = min(k1, k2)
        return edge_id[okey] if k1 == orbit_pref[okey] else -edge_id[okey]

    tri_orbits = {}
    for t in K.triangles:
        pts = [V[x] for x in t]
        key = action.triangle_key(pts)
        if key not in tri_orbits:
            tri_orbits[key] = pts
    words, reps = [], []
    for key in sorted(tri_orbits):
        p0, p1, p2 = tri_orbits[key]
        words.append((letter(p0, p1), letter(p1, p2), letter(p2, p0)))
        reps.append(tri_orbits[key])
    return QuotientComplex(len(vkeys), len(okeys), len(tri_orbits), names,
                           [orbit_pref[k] for k in okeys], [orbit_arrow[k] for k in okeys],
                           words, reps)


def _edge_names(n: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    if n <= 4:
        # arrow orbits sort last, so the arrow class is named d as in the K0 quotient
        return list(letters[:n])
    return [f"e{t}" for t in range(n)]


def k0_complex() -> CellComplex2:
    p = build_24cell()
    return CellComplex2(list(p.vertices), list(p.edges), k0_triangles(p))


class WindowTooSmall(RuntimeError):
    pass


def next_shell(radius_sq) -> int:
    """Smallest even integer above radius_sq (Lambda_D4 norms are even)."""
    from fractions import Fraction
    r = Fraction(radius_sq)
    return (r.numerator // r.denominator) // 2 * 2 + 2


def stable_quotient(which: str, radius_sq=4) -> QuotientComplex:
    """Quotient of the windowed complex, checked against the next shell."""
    if which == "K0":
        return quotient(k0_complex(), "K0")
    q1 = quotient(build_K(Window(radius_sq)), "K")
    q2 = quotient(build_K(Window(next_shell(radius_sq))), "K")
    if q1.counts != q2.counts or relator_multiset(extract_presentation(q1)) != relator_multiset(extract_presentation(q2)):
        raise WindowTooSmall(f"orbit data changes between radius_sq {radius_sq} and {next_shell(radius_sq)}")
    return q1


def extract_presentation(qc: QuotientComplex) -> Presentation:
    if qc.n_vertices != 1:
        raise ValueError("presentation extraction needs a one-vertex quotient")
    return Presentation(list(qc.edge_labels), list(qc.triangle_words))


# --- Todd-Coxeter ------------------------------------------------------------------

@dataclass
class CosetEnumeration:
    status: str  # "Finite" or "Exceeded"
    order: Optional[int]
    table: Optional[list] = None  # table[coset][col], col 2g / 2g+1 for gen g and inverse
    cosets_defined: int = 0

    @property
    def finite(self) -> bool:
        return self.status == "Finite"


class _CosetTable:
    def __init__(self, p: Presentation, max_cosets: int):
        self.ngens = len(p.generators)
        self.ncols = 2 * self.ngens
        self.max = max_cosets
        self.table = [[None] * self.ncols]
        self.parent = [0]
        self.deductions = []
        rels = []
        for w in p.relators:
            w = cyclic_reduce(w)
            if not w:
                continue
            for v in (w, invert_word(w)):
                for t in range(len(v)):
                    rels.append(tuple(self.col(x) for x in v[t:] + v[:t]))
        self.by_first = {c: [] for c in range(self.ncols)}
        for r in sorted(set(rels)):
            self.by_first[r[0]].append(r)
        self.relators = [tuple(self.col(x) for x in cyclic_reduce(w)) for w in p.relators]

    @staticmethod
    def col(x: int) -> int:
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    def live(self, a):
        return self.parent[a] == a

    def define(self, a, x):
        if len(self.table) >= self.max:
            raise OverflowError
        b = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(b)
        self.table[a][x] = b
        self.table[b][x ^ 1] = a
        self.deductions.append((a, x))

    def rep(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a, b):
        queue = []
        self.merge(a, b, queue)
        k = 0
        while k < len(queue):
            g = queue[k]
            k += 1
            for x in range(self.ncols):
                d = self.table[g][x]
                if d is None:
                    continue
                self.table[d][x ^ 1] = None
                mu, nu = self.rep(g), self.rep(d)
                if self.table[mu][x] is not None:
                    self.merge(nu, self.table[mu][x], queue)
                elif self.table[nu][x ^ 1] is not None:
                    self.merge(mu, self.table[nu][x ^ 1], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][x ^ 1] = mu
                    self.deductions.append((mu, x))

    def scan(self, a, word):
        t = self.table
        f, i, n = a, 0, len(word)
        while i < n and t[f][word[i]] is not None:
            f = t[f][word[i]]
            i += 1
        if i == n:
            if f != a:
                self.coincidence(f, a)
            return
        b, j = a, n - 1
        while j >= i and t[b][word[j] ^ 1] is not None:
            b = t[b][word[j] ^ 1]
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif j == i:
            t[f][word[i]] = b
            t[b][word[i] ^ 1] = f
            self.deductions.append((f, word[i]))

    def process_deductions(self):
        while self.deductions:
            a, x = self.deductions.pop()
            if not self.live(a):
                continue
            for r in self.by_first[x]:
                if not self.live(a):
                    break
                self.scan(a, r)
            b = self.table[a][x]
            if b is not None and self.live(b):
                for r in self.by_first[x ^ 1]:
                    if not self.live(b):
                        break
                    self.scan(b, r)

    def run(self):
        # Felsch strategy: fill the first undefined entry, then chase all deductions
        a = 0
        while a < len(self.table):
            if self.live(a):
                for x in range(self.ncols):
                    if not self.live(a):
                        break
                    if self.table[a][x] is None:
                        self.define(a, x)
                        self.process_deductions()
            a += 1

    def compact(self):
        live = [a for a in range(len(self.table)) if self.live(a)]
        new = {a: t for t, a in enumerate(live)}
        return [[new[self.rep(self.table[a][x])] for x in range(self.ncols)] for a in live]


def todd_coxeter(p: Presentation, max_cosets: int = 100_000) -> CosetEnumeration:
    """Enumerate cosets of the trivial subgroup.

    Exceeded means the coset cap was hit; it is evidence of a large or
    infinite group, not a proof.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    ct = _CosetTable(p, max_cosets)
    try:
        ct.run()
    except OverflowError:
        return CosetEnumeration("Exceeded", None, None, len(ct.table))
    table = ct.compact()
    return CosetEnumeration("Finite", len(table), table, len(ct.table))


def table_is_permutation_rep(p: Presentation, table: list) -> bool:
    """Each generator permutes the cosets and each relator acts trivially."""
    n = len(table)
    ng = len(p.generators)
    for g in range(ng):
        fwd = [row[2 * g] for row in table]
        if sorted(fwd) != list(range(n)):
            return False
        if any(table[fwd[a]][2 * g + 1] != a for a in range(n)):
            return False
    for w in p.relators:
        cols = [_CosetTable.col(x) for x in w]
        for a in range(n):
            b = a
            for c in cols:
                b = table[b][c]
            if b != a:
                return False
    return True


# --- abelianization ------------------------------------------------------------------

def exponent_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for w in p.relators:
        row = [0] * len(p.generators)
        for x in w:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def smith_diagonal(m: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, each dividing the next)."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        while True:
            _, pi, pj = min(nz)
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            piv = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // piv
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                # enforce divisibility of the remaining block
                bad = [(i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                       if a[i][j] % piv]
                if not bad:
                    break
                i, _ = bad[0]
                a[t] = [x + y for x, y in zip(a[t], a[i])]
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        diag.append(abs(a[t][t]))
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


def abelianization(p: Presentation) -> AbelianInvariants:
    m = exponent_matrix(p)
    diag = smith_diagonal(m) if m else []
    nonzero = [d for d in diag if d != 0]
    return AbelianInvariants(len(p.generators) - len(nonzero), tuple(d for d in nonzero if d > 1))
