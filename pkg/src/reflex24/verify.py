"""The verify-all pipeline: every acceptance check, run in a fixed order."""
from __future__ import annotations

import enum
import itertools
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .arrangement import (Window, hyperplane_of, verify_cell_incidence,
                          verify_intersection_points)
from .complexes import (build_24cell, build_K, full_voronoi_link, interior_vertices,
                        k0_link, k0_triangles, link_in_K, removed_link_edges)
from .graphs import cat1_check, generalized_petersen, hypercube, is_isomorphic, is_subdivided_theta
from .groups import (R1, R1_PRIME, RI, antipodal_at, generate_G4, reflection, stabilizer,
                     verify_reflection_fact, verify_translation_fact)
from .hquat import ONE, Quat, format_quat, quat_mul
from .isometry import FixedKind, IDENTITY, fixed_set
from .lattices import PHI, LatticeTag, coset_index, in_lattice
from .presentations import (WindowTooSmall, abelianization, equivalent_presentations,
                            extract_presentation, k0_complex, next_shell, parse_presentation,
                            quotient, table_is_permutation_rep, todd_coxeter)

BRAID_RELATORS = "abd,bcd,cad"
TETRA_RELATORS = "abd,bcd,cad,cba"


class Status(str, enum.Enum):
    Pass = "Pass"
    Fail = "Fail"
    Skipped = "Skipped"


@dataclass
class VerifyConfig:
    radius_sq: Fraction = Fraction(8)
    max_len: int = 6
    max_cosets: int = 100_000

    def __post_init__(self):
        self.radius_sq = Fraction(self.radius_sq)
        if self.radius_sq < 0:
            raise ValueError("radius_sq must be nonnegative")
        if self.max_len < 0:
            raise ValueError("max_len must be nonnegative")
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")

    def to_json(self) -> dict:
        return {"radius_sq": str(self.radius_sq), "max_len": self.max_len,
                "max_cosets": self.max_cosets}


@dataclass
class CheckResult:
    name: str
    criterion: int
    anchor: str
    status: Status
    details: dict = field(default_factory=dict)
    seconds: float = 0.0


@dataclass
class VerificationReport:
    config: VerifyConfig
    checks: list = field(default_factory=list)
    note: str = ("The CAT(0) conclusion for the braid group is not machine-checkable. "
                 "It is covered by criteria 6, 7 and 8 together: CAT(1) links, "
                 "order-2 vertex stabilizers and the one-vertex quotient.")

    @property
    def passed(self) -> bool:
        return all(c.status is not Status.Fail for c in self.checks)

    def criteria(self) -> dict[int, Status]:
        out = {}
        for c in self.checks:
            cur = out.get(c.criterion)
            if c.status is Status.Fail or cur is Status.Fail:
                out[c.criterion] = Status.Fail
            elif c.status is Status.Pass or cur is Status.Pass:
                out[c.criterion] = Status.Pass
            else:
                out[c.criterion] = Status.Skipped
        return dict(sorted(out.items()))

    def to_json(self, timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            d = {"name": c.name, "criterion": c.criterion, "anchor": c.anchor,
                 "status": c.status.value, "details": c.details}
            if timings:
                d["seconds"] = round(c.seconds, 3)
            checks.append(d)
        return {
            "config": self.config.to_json(),
            "passed": self.passed,
            "criteria": {str(k): v.value for k, v in self.criteria().items()},
            "checks": checks,
            "note": self.note,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [f"config: radius_sq={self.config.radius_sq} max_len={self.config.max_len} "
                 f"max_cosets={self.config.max_cosets}"]
        for c in self.checks:
            lines.append(f"[{c.status.value:7}] ({c.criterion:2}) {c.name}  {c.seconds:.2f}s")
            if c.status is Status.Fail:
                lines.append(f"          {json.dumps(c.details, sort_keys=True)}")
        lines.append("criteria: " + " ".join(f"{k}={v.value}" for k, v in self.criteria().items()))
        lines.append(self.note)
        lines.append("ALL PASS" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)


# --- individual checks -----------------------------------------------------------
# each returns (ok, details); details must be JSON-friendly and deterministic

def check_phi_group(phi: Sequence[Quat]):
    s = set(phi)
    closed = all(quat_mul(x, y) in s for x in phi for y in phi)
    inverses = all(any(quat_mul(x, y) == ONE for y in phi) for x in phi)
    ok = len(s) == 24 and ONE in s and closed and inverses
    return ok, {"size": len(s), "has_one": ONE in s, "closed": closed, "inverses": inverses}


def check_g4():
    g4 = generate_G4()
    labels = sorted(g4.labels.values())
    counts = {"L": 0, "r": 0, "r^2": 0}
    for lab in labels:
        base = lab.lstrip("-")
        kind = "L" if base.startswith("L_") else ("r^2" if base.endswith("^2") else "r")
        counts[kind] += 1
    ok = len(g4) == 24 and "?" not in labels and len(set(labels)) == 24 and \
        counts == {"L": 8, "r": 8, "r^2": 8}
    return ok, {"order": len(g4), "counts": counts, "labels": labels}


FIXED_LINE_DIRECTIONS = {
    "1": Quat(0, 1, -1, 0),
    "i": Quat(1, 0, 0, 1),
    "j": Quat(1, 0, 0, -1),
    "k": Quat(0, 1, 1, 0),
}


def same_complex_line(d1: Quat, d2: Quat) -> bool:
    """d2 lies in d1*C, C spanned by 1 and omega."""
    from .hquat import OMEGA
    from . import linalg
    cols = [d1.coords, quat_mul(d1, OMEGA).coords]
    rows = [[cols[0][t], cols[1][t]] for t in range(4)]
    return linalg.solve_affine(rows, list(d2.coords)) is not None


def check_fixed_lines():
    rows = {}
    ok = True
    for lab, want in FIXED_LINE_DIRECTIONS.items():
        fs = fixed_set(reflection(lab))
        good = fs.kind is FixedKind.ComplexLine and fs.basepoint == Quat(0) \
            and same_complex_line(fs.direction, want)
        rows[lab] = {"direction": format_quat(fs.direction), "ok": good}
        ok &= good
    a, b = fixed_set(R1_PRIME), fixed_set(RI)
    meet = [x for x in (Quat(1, 0, 0, 1),) if a.contains(x) and b.contains(x)]
    from .arrangement import intersect
    res = intersect(hyperplane_of(R1_PRIME), hyperplane_of(RI))
    point_ok = res.point == Quat(1, 0, 0, 1) and bool(meet)
    ok &= point_ok
    return ok, {"lines": rows, "r1_prime_meet_ri": format_quat(res.point) if res.point else None}


def check_k0():
    cell = build_24cell()
    tris = k0_triangles(cell)
    per_vertex = [sum(1 for t in tris if v in t) for v in range(24)]
    links = [k0_link(cell, v) for v in range(24)]
    cats = [cat1_check(g) for g in links]
    edges_used = {tuple(sorted(e)) for t in tris for e in itertools.combinations(t, 2)}
    ok = (cell.f_vector == (24, 96, 96, 24) and len(tris) == 72
          and len(edges_used) == 96
          and all(n == 9 for n in per_vertex)
          and all(g.n_nodes == 8 and g.n_edges == 9 and is_subdivided_theta(g) for g in links)
          and all(c.passed and c.min_cycle_units == 6 for c in cats))
    return ok, {"f_vector": list(cell.f_vector), "triangles_kept": len(tris),
                "edges_in_kept_triangles": len(edges_used),
                "triangles_per_vertex": sorted(set(per_vertex)),
                "min_cycle_units": sorted({c.min_cycle_units for c in cats})}


def check_stabilizers():
    d4 = Quat(1, 1, 0, 0)
    v = Quat(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    generic = Quat(Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 11))
    s_d4, s_v, s_g = stabilizer(d4), stabilizer(v), stabilizer(generic)
    nonid = [f for f in s_v if f != IDENTITY]
    ok = (len(s_d4) == 24 and len(s_v) == 2 and nonid == [antipodal_at(v)]
          and s_g == [IDENTITY])
    # every vertex of the 24-cell about 0 should agree
    ok &= all(len(stabilizer(x)) == 2 for x in PHI)
    ok &= all(len(stabilizer(x)) == 24 for x in (Quat(0), Quat(2), Quat(1, 0, 0, 1)))
    return ok, {"lambda_d4": len(s_d4), "lambda_minus_d4": len(s_v),
                "generic": len(s_g), "nonidentity": str(nonid[0]) if nonid else None}


def check_lattice_indices():
    a = coset_index(LatticeTag.LambdaD4, LatticeTag.Lambda)
    b = coset_index(LatticeTag.TwoLambda, LatticeTag.LambdaD4)
    return a == 4 and b == 4, {"Lambda/LambdaD4": a, "LambdaD4/2Lambda": b}


def check_quotient_k0():
    q = quotient(k0_complex(), "K0")
    p = extract_presentation(q)
    match = equivalent_presentations(p, parse_presentation(BRAID_RELATORS))
    return q.counts == (1, 4, 3) and match is not None, {
        "counts": list(q.counts), "presentation": str(p),
        "relabeling": {k: list(v) for k, v in match.items()} if match else None}


def check_quotient_k(K, radius_sq):
    q = quotient(K, "K")
    q2 = quotient(build_K(Window(next_shell(radius_sq))), "K")
    p = extract_presentation(q)
    stable = q.counts == q2.counts
    match = equivalent_presentations(p, parse_presentation(TETRA_RELATORS))
    ok = stable and q.counts == (1, 4, 4) and match is not None \
        and all(len(w) == 3 for w in p.relators)
    return ok, {"counts": list(q.counts), "next_shell_counts": list(q2.counts),
                "presentation": str(p),
                "relabeling": {k: list(v) for k, v in match.items()} if match else None}


def check_todd_coxeter(max_cosets):
    tet = parse_presentation(TETRA_RELATORS)
    res = todd_coxeter(tet, max_cosets)
    braid = todd_coxeter(parse_presentation(BRAID_RELATORS), min(max_cosets, 10_000))
    ok = res.finite and res.order == 24 and table_is_permutation_rep(tet, res.table) \
        and not braid.finite
    return ok, {"tetrahedral": res.status, "order": res.order,
                "braid_at_10000": braid.status}


def check_abelianizations():
    a4 = abelianization(parse_presentation(TETRA_RELATORS))
    a3 = abelianization(parse_presentation(BRAID_RELATORS))
    ok = (a4.free_rank, a4.torsion) == (0, (3,)) and (a3.free_rank, a3.torsion) == (1, ())
    return ok, {"four_relators": str(a4), "three_relators": str(a3)}


def verify_all(config: Optional[VerifyConfig] = None, phi: Optional[Sequence[Quat]] = None,
               log: Optional[Callable[[str], None]] = None) -> VerificationReport:
    """Run every check in order; failures are recorded and the run continues.

    phi replaces the unit Hurwitz table in the group check (used by tests to
    inject a corrupted table).
    """
    config = config or VerifyConfig()
    report = VerificationReport(config)
    R = config.radius_sq
    has_window = R > 0
    state = {}

    def run(name, criterion, anchor, fn, window=False):
        t0 = time.perf_counter()
        if window and not has_window:
            res = CheckResult(name, criterion, anchor, Status.Skipped, {"reason": "radius_sq is 0"})
        else:
            try:
                ok, details = fn()
                res = CheckResult(name, criterion, anchor, Status.Pass if ok else Status.Fail, details)
            except Exception as exc:  # a crash is a failed check, not a failed run
                res = CheckResult(name, criterion, anchor, Status.Fail,
                                  {"error": f"{type(exc).__name__}: {exc}"})
        res.seconds = time.perf_counter() - t0
        report.checks.append(res)
        if log:
            log(f"[{res.status.value}] {name}")

    def intersections():
        rep = verify_intersection_points(Window(R))
        return rep.ok, {"hyperplanes": rep.n_hyperplanes, "points": len(rep.points),
                        "non_lattice": len(rep.non_lattice), "missing": len(rep.missing)}

    def incidence():
        rep = verify_cell_incidence(Window(R))
        return rep.ok, {"counts": rep.counts, "violations": [[str(h), str(c)] for h, c in rep.violations]}

    def translations():
        rep = verify_translation_fact(config.max_len)
        return rep.ok, {"translations": len(rep.translations),
                        "all_in_two_lambda": rep.all_in_two_lambda,
                        "first_t2_length": rep.first_t2_length}

    def reflections():
        rep = verify_reflection_fact(config.max_len, Window(R) if has_window else None)
        return rep.ok, {"reflections": rep.n_reflections, "hyperplanes": len(rep.hyperplanes),
                        "unmatched": [str(f) for f in rep.unmatched],
                        "bad_planes": [str(h) for h in rep.odd_parity]}

    def k_build():
        K = build_K(Window(R))
        state["K"] = K
        problems = K.check_invariants()
        return not problems, {"vertices": len(K.vertices), "edges": len(K.edges),
                              "triangles": len(K.triangles),
                              "removed_triangles": len(K.removed_triangles),
                              "problems": problems[:10]}

    def links():
        K = state["K"]
        inner = interior_vertices(K)
        gp, q4 = generalized_petersen(8, 3), hypercube(4)
        bad = []
        for v in inner:
            g = link_in_K(K, v)
            full = full_voronoi_link(K, v)
            ok = (g.n_nodes == 16 and g.n_edges == 24 and g.is_regular(3)
                  and is_isomorphic(g, gp) and is_isomorphic(full, q4)
                  and len(removed_link_edges(K, v)) == 8
                  and set(g.edges) <= set(full.edges))
            if not ok:
                bad.append(format_quat(K.vertices[v]))
        state["inner"] = inner
        return bool(inner) and not bad, {"interior_vertices": len(inner), "bad": bad[:10]}

    def cat1():
        K = state["K"]
        mins = set()
        bad = []
        for v in state["inner"]:
            r = cat1_check(link_in_K(K, v))
            mins.add(r.min_cycle_units)
            if not (r.passed and r.min_cycle_units == 6):
                bad.append(format_quat(K.vertices[v]))
        return bool(state["inner"]) and not bad, {"min_cycle_units": sorted(mins), "bad": bad[:10]}

    run("Phi is a group", 1, "criterion 1: unit Hurwitz quaternions",
        lambda: check_phi_group(PHI if phi is None else phi))
    run("G4 enumeration", 1, "criterion 1: closure of r1, ri", check_g4)
    run("fixed-line table", 2, "criterion 2: fixed lines and Fix(r1') meet Fix(ri)", check_fixed_lines)
    run("intersection points", 4, "criterion 4: pairwise intersections", intersections, window=True)
    run("cell incidence", 4, "criterion 4: hyperplanes versus Voronoi cells", incidence, window=True)
    run("translations", 5, "criterion 5: translations lie in 2Lambda", translations)
    run("reflections", 5, "criterion 5: reflections match hyperplanes", reflections)
    run("24-cell and K0", 3, "criterion 3: f-vector, K0 triangles and links", check_k0)
    run("K construction", 6, "criterion 6: windowed complex K", k_build, window=True)
    run("vertex links", 6, "criterion 6: Moebius-Kantor links", links, window=True)
    run("CAT(1) links", 6, "criterion 6: girth of links", cat1, window=True)
    run("stabilizer orders", 7, "criterion 7: point stabilizers", check_stabilizers)
    run("K0 quotient", 8, "criterion 8: K0 modulo G4", check_quotient_k0)
    run("K quotient", 8, "criterion 8: K modulo the affine group",
        lambda: check_quotient_k(state["K"], R), window=True)
    run("Todd-Coxeter", 9, "criterion 9: binary tetrahedral order", lambda: check_todd_coxeter(config.max_cosets))
    run("abelianizations", 9, "criterion 9: Smith normal forms", check_abelianizations)
    run("lattice indices", 10, "criterion 10: index chain", check_lattice_indices)
    return report
