"""Command line entry point ``reflex24``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

# key -> parser for the key=value config file; keys mirror the long flags
CONFIG_KEYS = {
    "radius_sq": Fraction,
    "max_len": int,
    "max_cosets": int,
    "json": lambda s: s.strip().lower() in ("1", "true", "yes", "on"),
    "svg_lenses": str,
    "out": str,
    "space": str,
    "relators": str,
}


class ConfigError(ValueError):
    pass


def read_config(path: str) -> dict:
    """Parse 'key = value' lines; '#' starts a comment, [sections] are ignored."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or (line.startswith("[") and line.endswith("]")):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{n}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        val = val.strip('"').strip("'")
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path}:{n}: unknown key {key!r}")
        try:
            out[key] = CONFIG_KEYS[key](val)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"{path}:{n}: bad value for {key}: {val!r}") from exc
    return out


def _merge(args, defaults: dict) -> dict:
    """Flags win over the config file, which wins over defaults."""
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    merged = dict(defaults)
    merged.update({k: v for k, v in cfg.items() if k in defaults})
    for k in defaults:
        v = getattr(args, k, None)
        if v is not None and v is not False:
            merged[k] = v
    return merged


def _emit(data, out: str | None):
    text = json.dumps(data, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
        print(f"wrote {out}")
    else:
        print(text)


# --- subcommands -------------------------------------------------------------------

def cmd_verify_all(args) -> int:
    from .verify import VerifyConfig, verify_all
    opts = _merge(args, {"radius_sq": Fraction(8), "max_len": 6, "max_cosets": 100_000,
                         "json": False, "svg_lenses": None})
    try:
        config = VerifyConfig(opts["radius_sq"], opts["max_len"], opts["max_cosets"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    log = None if opts["json"] else (lambda s: print(s, file=sys.stderr))
    report = verify_all(config, log=log)
    if opts["svg_lenses"]:
        from .svg import lens_svg
        Path(opts["svg_lenses"]).write_text(lens_svg())
    print(report.dumps() if opts["json"] else report.text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_group_enum(args) -> int:
    from .arrangement import hyperplane_of
    from .groups import bfs_layers, verify_translation_fact
    from .isometry import IsometryClass, classify
    opts = _merge(args, {"max_len": 6, "out": None})
    layers = bfs_layers(opts["max_len"])
    classes = {}
    planes = set()
    for layer in layers:
        for f in layer:
            c = classify(f)
            classes[c.value] = classes.get(c.value, 0) + 1
            if c is IsometryClass.Reflection:
                planes.add(hyperplane_of(f))
    tr = verify_translation_fact(opts["max_len"])
    _emit({
        "max_len": opts["max_len"],
        "layer_sizes": [len(layer) for layer in layers],
        "classes": dict(sorted(classes.items())),
        "translations": [t.to_json() for t in tr.translations],
        "translations_in_two_lambda": tr.all_in_two_lambda,
        "hyperplanes": [h.to_json() for h in sorted(planes)],
    }, opts["out"])
    return EXIT_OK if tr.all_in_two_lambda else EXIT_FAIL


def cmd_arrangement_verify(args) -> int:
    from .arrangement import Window, enumerate_hyperplanes, verify_cell_incidence, verify_intersection_points
    opts = _merge(args, {"radius_sq": Fraction(8), "out": None})
    w = Window(opts["radius_sq"])
    ir = verify_intersection_points(w)
    cr = verify_cell_incidence(w)
    _emit({
        "radius_sq": str(w.radius_sq),
        "hyperplanes": [h.to_json() for h in enumerate_hyperplanes(w)],
        "intersection_points": [[p.to_json(), n] for p, n in ir.points.items()],
        "non_lattice": [p.to_json() for p in ir.non_lattice],
        "missing": [p.to_json() for p in ir.missing],
        "incidence": cr.counts,
        "violations": [[h.to_json(), c.to_json()] for h, c in cr.violations],
    }, opts["out"])
    return EXIT_OK if ir.ok and cr.ok else EXIT_FAIL


def cmd_complex_build(args) -> int:
    from .arrangement import Window
    from .complexes import build_K
    opts = _merge(args, {"radius_sq": Fraction(8), "out": None})
    K = build_K(Window(opts["radius_sq"]))
    data = K.to_json()
    data["radius_sq"] = str(opts["radius_sq"])
    _emit(data, opts["out"])
    return EXIT_OK if not K.check_invariants() else EXIT_FAIL


def cmd_complex_links(args) -> int:
    from .arrangement import Window
    from .complexes import build_K, interior_vertices, link_in_K
    from .graphs import cat1_check, generalized_petersen, is_isomorphic
    opts = _merge(args, {"radius_sq": Fraction(8), "out": None})
    K = build_K(Window(opts["radius_sq"]))
    inner = interior_vertices(K)
    if not args.all:
        inner = inner[:1]
    gp = generalized_petersen(8, 3)
    rows, ok = [], True
    for v in inner:
        g = link_in_K(K, v)
        r = cat1_check(g)
        mk = is_isomorphic(g, gp)
        ok &= r.passed and mk
        rows.append({"vertex": K.vertices[v].to_json(), "nodes": g.n_nodes, "edges": g.n_edges,
                     "moebius_kantor": mk, "cat1": r.passed, "min_cycle_units": r.min_cycle_units})
    _emit({"radius_sq": str(opts["radius_sq"]), "interior_vertices": len(interior_vertices(K)),
           "links": rows}, opts["out"])
    return EXIT_OK if ok and rows else EXIT_FAIL


def cmd_complex_lenses(args) -> int:
    from .complexes import lens_assignment
    from .lattices import phi_label
    table = lens_assignment()
    if args.svg:
        from .svg import lens_svg
        Path(args.svg).write_text(lens_svg(table))
        print(f"wrote {args.svg}")
    for lens in table.lenses:
        print(f"lens {lens.index}  center {lens.center}  "
              f"front {' '.join(phi_label(x) for x in lens.front)}  "
              f"back {' '.join(phi_label(x) for x in lens.back)}")
    return EXIT_OK


def cmd_quotient(args) -> int:
    from .presentations import extract_presentation, stable_quotient
    opts = _merge(args, {"space": "K", "radius_sq": Fraction(4), "out": None})
    if opts["space"] not in ("K", "K0"):
        raise ConfigError(f"space must be K or K0, not {opts['space']!r}")
    q = stable_quotient(opts["space"], opts["radius_sq"])
    p = extract_presentation(q)
    _emit({"space": opts["space"], "counts": list(q.counts), "edge_labels": q.edge_labels,
           "arrow_orbits": q.arrow_orbits, "relators": [p.word_str(w) for w in p.relators],
           "presentation": str(p)}, opts["out"])
    return EXIT_OK


def cmd_tc(args) -> int:
    from .presentations import abelianization, parse_presentation, todd_coxeter
    opts = _merge(args, {"relators": None, "max_cosets": 100_000, "out": None})
    if not opts["relators"]:
        raise ConfigError("no relators given")
    try:
        p = parse_presentation(opts["relators"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if opts["max_cosets"] < 1:
        raise ConfigError("max_cosets must be >= 1")
    res = todd_coxeter(p, opts["max_cosets"])
    _emit({"presentation": str(p), "status": res.status, "order": res.order,
           "cosets_defined": res.cosets_defined, "abelianization": str(abelianization(p))},
          opts["out"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reflex24", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, radius=True, out=True):
        p.add_argument("--config", help="key = value file; flags win")
        if radius:
            p.add_argument("--radius-sq", dest="radius_sq", type=Fraction)
        if out:
            p.add_argument("--out")
        return p

    p = common(sub.add_parser("verify-all", help="run every check"), out=False)
    p.add_argument("--max-len", dest="max_len", type=int)
    p.add_argument("--max-cosets", dest="max_cosets", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg-lenses", dest="svg_lenses")
    p.set_defaults(func=cmd_verify_all)

    g = sub.add_parser("group").add_subparsers(dest="action", required=True)
    p = common(g.add_parser("enum", help="BFS over words in the generators"), radius=False)
    p.add_argument("--max-len", dest="max_len", type=int)
    p.set_defaults(func=cmd_group_enum)

    a = sub.add_parser("arrangement").add_subparsers(dest="action", required=True)
    common(a.add_parser("verify", help="hyperplanes, intersections, incidence")).set_defaults(
        func=cmd_arrangement_verify)

    c = sub.add_parser("complex").add_subparsers(dest="action", required=True)
    common(c.add_parser("build", help="export K as JSON")).set_defaults(func=cmd_complex_build)
    p = common(c.add_parser("links", help="link checks at interior vertices"))
    p.add_argument("--all", action="store_true", help="every interior vertex, not just the first")
    p.set_defaults(func=cmd_complex_links)
    p = c.add_parser("lenses", help="lens decomposition table")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_complex_lenses)

    p = common(sub.add_parser("quotient", help="orbit counts and presentation"))
    p.add_argument("--space", choices=["K", "K0"])
    p.set_defaults(func=cmd_quotient)

    p = common(sub.add_parser("tc", help="Todd-Coxeter coset enumeration"), radius=False)
    p.add_argument("--relators")
    p.add_argument("--max-cosets", dest="max_cosets", type=int)
    p.set_defaults(func=cmd_tc)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
