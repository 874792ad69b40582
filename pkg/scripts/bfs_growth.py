"""Growth of the word ball in the generators r1, ri, r1' and what it contains."""
import argparse
import time

from reflex24.groups import bfs_layers
from reflex24.isometry import IsometryClass, classify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=7)
    args = ap.parse_args()

    t0 = time.perf_counter()
    layers = bfs_layers(args.max_len)
    total = 0
    print(f"{'len':>3} {'new':>6} {'total':>7}  " + " ".join(f"{c.value[:10]:>10}" for c in IsometryClass))
    for n, layer in enumerate(layers):
        total += len(layer)
        counts = {c: 0 for c in IsometryClass}
        for f in layer:
            counts[classify(f)] += 1
        print(f"{n:3d} {len(layer):6d} {total:7d}  " + " ".join(f"{counts[c]:10d}" for c in IsometryClass))
    print(f"{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
