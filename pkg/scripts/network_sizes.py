"""Neutral-network size rankings for a few target distributions.

Writes one row per (target, landscape, rank). Sizes are in decreasing order,
so plotting size against rank on a log scale shows how the target shapes the
network structure.
"""

import argparse

import numpy as np

from ndscape.analysis import network_size_ranking
from ndscape.netfit import window_distribution
from ndscape.pipeline import build_nd

from _common import emit


def targets(n):
    bell = np.exp(-0.5 * ((np.arange(n + 1) - 5) / 1.5) ** 2)
    return {
        "window 3,4": window_distribution(3, 4, n),
        "window 2,6": window_distribution(2, 6, n),
        "bell 5": bell / bell.sum(),
        "spike 4": window_distribution(4, 1, n),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--landscapes", type=int, default=50)
    ap.add_argument("--anneal-budget", type=int)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    rows = []
    for name, target in targets(args.n).items():
        for i in range(args.landscapes):
            b = build_nd(args.n, target, args.seed + i, anneal_moves=args.anneal_budget)
            rows.extend((name, i, b.mean_degree, rank, size)
                        for rank, size in network_size_ranking(b.landscape))
    emit(args.out, ["target", "landscape", "mean_degree", "rank", "size"], rows, args.seed)


if __name__ == "__main__":
    main()
