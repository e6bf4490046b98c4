"""Deceptiveness tuning: trap-function fitness for whole neutral networks."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .core import Landscape, NetworkPartition, partition

DEFAULT_NOISE = 1e-6
GAP_TOL = 1e-12


@dataclass(frozen=True)
class TrapParams:
    b: float
    r: float

    def __post_init__(self):
        if not 0 < self.b < 1:
            raise ValueError(f"b must lie in (0, 1), got {self.b}")
        if not 0 < self.r <= 1:
            raise ValueError(f"r must lie in (0, 1], got {self.r}")


DECEPTIVE = TrapParams(b=0.25, r=0.9)
EASY = TrapParams(b=0.75, r=0.9)


def trap(d, params: TrapParams):
    """Piecewise-linear trap of a normalized distance ``d`` in ``[0, 1]``.

    Falls from 1 at ``d = 0`` to 0 at ``d = b``, then rises to ``r`` at
    ``d = 1``. Accepts scalars or arrays.
    """
    x = np.asarray(d, dtype=np.float64)
    if np.any((x < 0) | (x > 1)) or np.any(np.isnan(x)):
        raise ValueError("trap distance must lie in [0, 1]")
    b, r = params.b, params.r
    out = np.where(x <= b, 1.0 - x / b, r * (x - b) / (1.0 - b))
    return float(out) if out.ndim == 0 else out


def window_distribution(p: int, w: int, n_bits: int) -> np.ndarray:
    """Uniform weight ``1/w`` on degrees ``p .. p+w-1`` inclusive."""
    if p < 0 or w < 1 or p + w - 1 > n_bits:
        raise ValueError(f"window p={p}, w={w} does not fit in degrees 0..{n_bits}")
    weights = np.zeros(n_bits + 1)
    weights[p:p + w] = 1.0 / w
    return weights


def centroid_distances(part: NetworkPartition, anchor_network: int) -> np.ndarray:
    """Normalized L1 distance from each network's centroid to the anchor's."""
    ref = part.centroids[anchor_network]
    d = np.abs(part.centroids - ref).sum(axis=1) / part.n_bits
    return np.clip(d, 0.0, 1.0)


@dataclass(frozen=True)
class TrapAssignment:
    landscape: Landscape
    partition: NetworkPartition  # of the input landscape
    optimum: int  # network id of the optimal network
    distances: np.ndarray
    fitness: np.ndarray  # per network


def assign_trap(
    landscape: Landscape,
    params: TrapParams,
    noise_amplitude: float = DEFAULT_NOISE,
    rng: np.random.Generator | None = None,
    anchor: int = 0,
) -> TrapAssignment:
    """Give every neutral network a trap fitness from its centroid distance.

    The network containing ``anchor`` gets fitness 1.0. With positive
    ``noise_amplitude`` each other network gets an extra uniform draw from
    ``[0, noise_amplitude]``, redrawn until adjacent networks all differ, so
    the network partition is preserved.
    """
    if noise_amplitude < 0:
        raise ValueError("noise_amplitude must be non-negative")
    if not 0 <= anchor < landscape.size:
        raise ValueError(f"anchor {anchor} is not a genotype of a {landscape.n_bits}-bit landscape")
    rng = rng if rng is not None else np.random.default_rng()
    part = partition(landscape)
    opt = int(part.labels[anchor])
    dist = centroid_distances(part, opt)
    fit = np.asarray(trap(dist, params), dtype=np.float64).reshape(-1)
    fit[opt] = 1.0

    if noise_amplitude > 0:
        levels = np.unique(fit)
        gaps = np.diff(levels)
        gaps = gaps[gaps > GAP_TOL]  # ignore rounding between equal trap levels
        if len(gaps) and noise_amplitude >= gaps.min() / 2:
            warnings.warn(
                f"noise amplitude {noise_amplitude} is at least half the smallest trap gap "
                f"{gaps.min()}; basin ordering may change",
                stacklevel=2,
            )
        base = fit.copy()
        others = np.arange(part.count) != opt
        fit[others] = base[others] + rng.uniform(0.0, noise_amplitude, others.sum())
        pairs = part.adjacent_pairs()
        while True:
            clash = pairs[fit[pairs[:, 0]] == fit[pairs[:, 1]]]
            if not len(clash):
                break
            # redraw one side of each clash, never the optimum
            side = np.where(clash[:, 1] != opt, clash[:, 1], clash[:, 0])
            side = np.unique(side)
            fit[side] = base[side] + rng.uniform(0.0, noise_amplitude, len(side))

    return TrapAssignment(
        landscape=Landscape(landscape.n_bits, fit[part.labels]),
        partition=part,
        optimum=opt,
        distances=dist,
        fitness=fit,
    )
