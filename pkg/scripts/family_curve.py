"""Normalised exponents of the Hamming, Singleton and optimised bounds for q-ary substitution/erasure codes."""

import argparse
import csv
import sys

from combibounds.family import family_curve, limit_exponent


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--n", type=int, default=400)
    ap.add_argument("--plot", metavar="PNG", help="also draw the curves (needs matplotlib)")
    args = ap.parse_args()

    pts = family_curve(args.q, args.n)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["delta", "hamming", "singleton", "optimized", "limit_line", "b_star"])
    for p in pts:
        d = float(p.delta)
        out.writerow([
            f"{d:.4f}",
            *(f"{p.exponent(k, args.n):.6f}" for k in ("hamming", "singleton", "optimized")),
            f"{limit_exponent(args.q, d):.6f}",
            p.b_star,
        ])

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        xs = [float(p.delta) for p in pts]
        for key in ("hamming", "singleton", "optimized"):
            plt.plot(xs, [p.exponent(key, args.n) for p in pts], label=key)
        plt.xlabel("delta = s/n")
        plt.ylabel("(1/n) ln bound")
        plt.title(f"q = {args.q}, n = {args.n}")
        plt.legend()
        plt.savefig(args.plot, dpi=120)
    return 0


if __name__ == "__main__":
    sys.exit(main())
