"""Orbit counts of K modulo the affine group as the window grows.

Shows the smallest radius_sq at which the quotient data stops changing.
"""
import argparse
import time

from reflex24.arrangement import Window
from reflex24.complexes import build_K, interior_vertices
from reflex24.presentations import extract_presentation, quotient, relator_multiset


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-radius-sq", type=int, default=8)
    args = ap.parse_args()

    prev = None
    print(f"{'R':>3} {'verts':>6} {'edges':>6} {'tris':>6} {'inner':>6}  counts     stable  secs")
    for R in range(0, args.max_radius_sq + 1, 2):
        t0 = time.perf_counter()
        K = build_K(Window(R))
        q = quotient(K, "K")
        rels = relator_multiset(extract_presentation(q))
        key = (q.counts, rels)
        stable = prev is not None and key == prev
        print(f"{R:3d} {len(K.vertices):6d} {len(K.edges):6d} {len(K.triangles):6d} "
              f"{len(interior_vertices(K)):6d}  {q.counts}  {str(stable):6}  {time.perf_counter() - t0:.2f}")
        prev = key


if __name__ == "__main__":
    main()
