"""FDC and GA success rate against mean neutral degree, for both trap variants.

Each window D_{p,w} gets ``--landscapes`` builds. Every build is trapped with
the deceptive and the easy parameters; FDC is exhaustive and the GA success
rate uses ``--runs`` independent runs (0 skips the GA).
"""

import argparse
import sys

from ndscape.analysis import fdc
from ndscape.core import partition
from ndscape.ga import GaParams, success_rate
from ndscape.netfit import DECEPTIVE, EASY, window_distribution
from ndscape.pipeline import build_nd, trap_landscape

from _common import emit

TRAPS = {"deceptive": DECEPTIVE, "easy": EASY}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--landscapes", type=int, default=10)
    ap.add_argument("--runs", type=int, default=200)
    ap.add_argument("--p-max", type=int, default=7)
    ap.add_argument("--widths", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--recipients", choices=["uniform", "aligned"], default="aligned")
    ap.add_argument("--anneal-budget", type=int)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    ga = GaParams(runs=max(args.runs, 1))
    rows = []
    for p in range(args.p_max + 1):
        for w in args.widths:
            target = window_distribution(p, w, args.n)
            for i in range(args.landscapes):
                seed = args.seed + 1000 * p + 100 * w + i
                b = build_nd(args.n, target, seed, anneal_moves=args.anneal_budget,
                             recipients=args.recipients)
                part = partition(b.landscape)
                opt_size = int(part.sizes[part.labels[0]])
                for name, params in TRAPS.items():
                    land = trap_landscape(b, params, seed)
                    value = fdc(land).fdc
                    rate = half = float("nan")
                    if args.runs:
                        rate, half = success_rate(land, ga, seed, jobs=args.jobs)
                    rows.append((p, w, i, b.mean_degree, b.distance, opt_size, name, value,
                                 rate, half))
                    print(f"D{p},{w} #{i} {name}: mean {b.mean_degree:.2f} fdc {value:+.3f} "
                          f"success {rate:.3f}", file=sys.stderr, flush=True)
    emit(args.out, ["p", "w", "landscape", "mean_degree", "distance", "optimal_network_size",
                    "trap", "fdc", "success_rate", "ci_half_width"], rows, args.seed)


if __name__ == "__main__":
    main()
