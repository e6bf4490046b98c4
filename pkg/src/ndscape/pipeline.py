"""End-to-end construction: generate, anneal, then assign trap fitness.

Randomness comes from one ``SeedSequence`` per landscape, split into three
child streams in a fixed order: generation, annealing, trap noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .annealer import AnnealSchedule, refine
from .core import Landscape, degree_distribution, distribution_stats, rms_distance
from .generator import ConstructionLog, generate_nd
from .netfit import DEFAULT_NOISE, TrapParams, assign_trap


def streams(seed: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(3)]


@dataclass(frozen=True)
class NdBuild:
    landscape: Landscape
    target: np.ndarray
    raw_distance: float  # after construction, before annealing
    distance: float
    mean_degree: float
    log: ConstructionLog
    trace: np.ndarray | None  # annealing (move, energy) trace, None if skipped


def build_nd(
    n_bits: int,
    target,
    seed: int,
    anneal: bool = True,
    anneal_moves: int | None = None,
    allow_large: bool = False,
    recipients: str = "aligned",
    join: bool = False,
) -> NdBuild:
    gen_rng, sa_rng, _ = streams(seed)
    target = np.asarray(target, dtype=np.float64)
    raw, log = generate_nd(n_bits, target, gen_rng, allow_large=allow_large,
                           return_log=True, recipients=recipients, join=join)
    raw_dist = rms_distance(degree_distribution(raw), target)
    land, trace = raw, None
    if anneal:
        result = refine(raw, target, AnnealSchedule.default(n_bits, anneal_moves), sa_rng)
        land, trace = result.landscape, result.trace
    dist = degree_distribution(land)
    return NdBuild(land, target, raw_dist, rms_distance(dist, target),
                   distribution_stats(dist)[0], log, trace)


def trap_landscape(
    build: NdBuild | Landscape, params: TrapParams, seed: int, noise: float = DEFAULT_NOISE
) -> Landscape:
    land = build.landscape if isinstance(build, NdBuild) else build
    _, _, trap_rng = streams(seed)
    return assign_trap(land, params, noise, trap_rng).landscape
