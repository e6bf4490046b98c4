"""Neutral-degree statistics of the reference landscape families.

One row per family: mean over seeds of the mean neutral degree, and the mean
of the per-landscape standard deviations.
"""

import argparse

import numpy as np

from ndscape.core import degree_distribution, distribution_stats
from ndscape.reference import nk_family, royal_road, technological

from _common import emit


def families(n):
    return {
        "royal-road 4x4": lambda rng: royal_road(n, 4, n // 4),
        "nkp k=5 p=0.8": lambda rng: nk_family(n, 5, rng, p=0.8),
        "nkq k=4 q=2": lambda rng: nk_family(n, 4, rng, q=2),
        "tech k=4 m=20": lambda rng: technological(n, 4, 20, rng),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--seeds", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    rows = []
    for name, build in families(args.n).items():
        stats = np.array([
            distribution_stats(degree_distribution(build(np.random.default_rng(args.seed + s))))
            for s in range(args.seeds)
        ])
        rows.append((name, args.n, args.seeds, stats[:, 0].mean(), stats[:, 1].mean()))
    emit(args.out, ["family", "n", "seeds", "mean_degree", "std_degree"], rows, args.seed)


if __name__ == "__main__":
    main()
