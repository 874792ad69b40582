"""Refl(G4), its affine extension by the translation lattice 2*Lambda, and
bounded word enumeration used to cross-check the structural facts."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .hquat import I, J, K, ONE, ZETA, Quat, conj, quat_mul
from .isometry import (IDENTITY, EuclideanMap, IsometryClass, apply, classify,
                       compose, invert, left_mult, power)
from .lattices import LINE_LABELS, LINE_QUATS, LatticeTag, in_lattice

DEFAULT_MAX_LEN = 6


def zeta_conjugate(q: Quat) -> Quat:
    """zeta conjugated by q, i.e. q^-1 * zeta * q for a unit q."""
    return quat_mul(quat_mul(conj(q), ZETA), q)


def reflection(label: str) -> EuclideanMap:
    """The order-3 reflection r_q: x -> zeta^q * x * zeta."""
    return EuclideanMap(zeta_conjugate(LINE_QUATS[label]), 1)


R1 = reflection("1")
RI = reflection("i")
R1_PRIME = EuclideanMap(ZETA, 1, Quat(2))
GENERATORS = (R1, RI, R1_PRIME)
GENERATOR_NAMES = ("r1", "ri", "r1'")


@dataclass(frozen=True)
class FiniteGroupTable:
    elements: tuple[EuclideanMap, ...]
    labels: dict = field(hash=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, f: EuclideanMap) -> bool:
        return f in self.labels

    def label(self, f: EuclideanMap) -> str:
        return self.labels[f]


def named_elements() -> dict[EuclideanMap, str]:
    """The 24 maps +-L_q, +-r_q, +-r_q^2 keyed to their names."""
    names = {}
    minus = left_mult(-ONE)
    for lab in LINE_LABELS:
        q = LINE_QUATS[lab]
        r = reflection(lab)
        for f, name in ((left_mult(q), f"L_{lab}"), (r, f"r_{lab}"),
                        (compose(r, r), f"r_{lab}^2")):
            names[f] = name
            names[compose(minus, f)] = "-" + name
    return names


def closure(gens, limit: int = 10_000) -> list[EuclideanMap]:
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = compose(g, f)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        if len(seen) > limit:
            raise RuntimeError("closure did not stabilize")
        frontier = nxt
    return sorted(seen, key=EuclideanMap.key)


@lru_cache(maxsize=None)
def generate_G4() -> FiniteGroupTable:
    elements = closure([R1, RI])
    names = named_elements()
    labels = {f: names.get(f, "?") for f in elements}
    return FiniteGroupTable(tuple(elements), labels)


def membership(f: EuclideanMap) -> bool:
    """Membership in Refl(G4~) = 2*Lambda x| Refl(G4)."""
    return f.linear in generate_G4() and in_lattice(f.v, LatticeTag.TwoLambda)


@dataclass(frozen=True)
class AffineGroupHandle:
    generators: tuple = GENERATORS
    translation_tag: LatticeTag = LatticeTag.TwoLambda

    @property
    def linear_table(self) -> FiniteGroupTable:
        return generate_G4()

    def __contains__(self, f: EuclideanMap) -> bool:
        return membership(f)


def bfs_layers(max_len: int, gens=GENERATORS) -> list[list[EuclideanMap]]:
    """Elements grouped by word length in the generators and their inverses."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    letters = list(gens) + [invert(g) for g in gens]
    seen = {IDENTITY}
    layers = [[IDENTITY]]
    for _ in range(max_len):
        nxt = []
        for f in layers[-1]:
            for g in letters:
                h = compose(f, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        layers.append(nxt)
    return layers


def bfs_words(max_len: int) -> set[EuclideanMap]:
    return {f for layer in bfs_layers(max_len) for f in layer}


def stabilizer(x: Quat) -> list[EuclideanMap]:
    """Every element of Refl(G4~) fixing x.

    Each linear part g forces the translation x - g(x); the element is in the
    group exactly when that translation lies in 2*Lambda.
    """
    out = []
    for g in generate_G4().elements:
        v = x - apply(g, x)
        if in_lattice(v, LatticeTag.TwoLambda):
            out.append(EuclideanMap(g.q, g.l, v))
    return out


def antipodal_at(v: Quat) -> EuclideanMap:
    """x -> -x + 2v."""
    return EuclideanMap(-ONE, 0, v * 2)


@dataclass
class TranslationReport:
    max_len: int
    translations: list[Quat]
    all_in_two_lambda: bool
    first_t2_length: int | None
    two_phi_depth: int | None

    @property
    def ok(self) -> bool:
        return self.all_in_two_lambda and self.first_t2_length is not None


def verify_translation_fact(max_len: int = DEFAULT_MAX_LEN) -> TranslationReport:
    from .lattices import PHI
    layers = bfs_layers(max_len)
    found = {}
    for n, layer in enumerate(layers):
        for f in layer:
            if classify(f) is IsometryClass.Translation:
                found.setdefault(f.v, n)
    target = {u * 2 for u in PHI}
    depth = None
    if target <= set(found):
        depth = max(found[t] for t in target)
    return TranslationReport(
        max_len=max_len,
        translations=sorted(found),
        all_in_two_lambda=all(in_lattice(v, LatticeTag.TwoLambda) for v in found),
        first_t2_length=found.get(Quat(2)),
        two_phi_depth=depth,
    )


@dataclass
class ReflectionReport:
    max_len: int
    n_reflections: int
    hyperplanes: list
    unmatched: list[EuclideanMap]
    odd_parity: list

    @property
    def ok(self) -> bool:
        return not self.unmatched and not self.odd_parity


def parallel_reflection(label: str, v: Quat, squared: bool = False) -> EuclideanMap:
    """t_v o r_q o t_v^-1 (or with r_q^2)."""
    from .isometry import translation
    r = reflection(label)
    if squared:
        r = power(r, 2)
    return compose(compose(translation(v), r), translation(-v))


def verify_reflection_fact(max_len: int = DEFAULT_MAX_LEN, window=None) -> ReflectionReport:
    """Every reflection found by BFS is t_v o r_q^(+-1) o t_v^-1 with v in Lambda_D4.

    With a window, hyperplanes are additionally checked to appear in the
    enumerated arrangement whenever they meet that window.
    """
    from .arrangement import Window, enumerate_hyperplanes, hyperplane_of, witness
    refl = [f for f in bfs_words(max_len) if classify(f) is IsometryClass.Reflection]
    planes, unmatched, odd = set(), [], []
    for f in refl:
        h = hyperplane_of(f)
        planes.add(h)
        if (h.l + h.m) % 2:
            odd.append(h)
            continue
        v = witness(h)
        if f not in (parallel_reflection(h.family, v), parallel_reflection(h.family, v, True)):
            unmatched.append(f)
    if window is not None:
        w = window if isinstance(window, Window) else Window(window)
        listed = set(enumerate_hyperplanes(w))
        for h in planes:
            if h.distance_sq() <= w.radius_sq and h not in listed:
                odd.append(h)
    return ReflectionReport(max_len, len(refl), sorted(planes), unmatched, odd)
