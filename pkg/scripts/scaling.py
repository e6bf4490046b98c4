"""Wall time and peak memory of generation plus annealing against N."""

import argparse
import resource
import sys
import time

from ndscape.netfit import window_distribution
from ndscape.pipeline import build_nd

from _common import emit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14, 16])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    build_nd(8, window_distribution(2, 4, 8), args.seed)  # compile once
    rows = []
    for n in args.sizes:
        target = window_distribution(2, 4, n)
        for r in range(args.repeats):
            start = time.perf_counter()
            b = build_nd(n, target, args.seed + r)
            elapsed = time.perf_counter() - start
            rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
            rows.append((n, r, elapsed, elapsed / ((1 << n) * n * n), rss, b.distance))
            print(f"N={n} repeat {r}: {elapsed:.2f}s", file=sys.stderr, flush=True)
    emit(args.out, ["n", "repeat", "seconds", "seconds_per_2n_n2", "peak_rss_mb", "distance"],
         rows, args.seed)


if __name__ == "__main__":
    main()
