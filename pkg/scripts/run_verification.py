"""Run the full verification pipeline and write the JSON report plus the lens SVG."""
import argparse
from fractions import Fraction
from pathlib import Path

from reflex24.svg import lens_svg
from reflex24.verify import VerifyConfig, verify_all


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius-sq", type=Fraction, default=Fraction(8))
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    report = verify_all(VerifyConfig(args.radius_sq, args.max_len), log=print)
    (out / "verification.json").write_text(report.dumps() + "\n")
    (out / "lenses.svg").write_text(lens_svg())
    print(report.text())
    print(f"wrote {out}/verification.json and {out}/lenses.svg")


if __name__ == "__main__":
    main()
