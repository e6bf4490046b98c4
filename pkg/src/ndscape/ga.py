"""Generational GA benchmark and its success-rate estimate.

Each generation builds ``population/2`` pairs. A parent is the best of
``tournament`` uniform picks (ties go to the first drawn). A pair is crossed
at one uniform cut point in ``[1, N-1]`` with probability ``crossover_rate``;
each child then flips exactly one uniform bit with probability
``mutation_rate``. Children replace the whole population. A run succeeds if
any evaluated individual, the initial population included, reaches the
landscape maximum.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GaParams:
    population: int = 50
    generations: int = 50
    mutation_rate: float = 0.8
    crossover_rate: float = 0.2
    tournament: int = 3
    elitism: bool = False
    runs: int = 1000

    def __post_init__(self):
        for name in ("mutation_rate", "crossover_rate"):
            if not 0 <= getattr(self, name) <= 1:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.population < 2 or self.population % 2:
            raise ValueError("population must be an even number >= 2")
        if self.tournament < 1:
            raise ValueError("tournament size must be >= 1")
        if self.generations < 0:
            raise ValueError("generations must be >= 0")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")


@dataclass(frozen=True)
class RunResult:
    success: bool
    best_fitness: float
    evaluations: int


def _select(fitness: np.ndarray, count: int, size: int, rng: np.random.Generator) -> np.ndarray:
    picks = rng.integers(0, len(fitness), size=(count, size))
    winner = np.argmax(fitness[picks], axis=1)  # first maximum = first drawn
    return picks[np.arange(count), winner]


def ga_run(landscape, params: GaParams, seed: int) -> RunResult:
    """One GA run on anything with ``n_bits``, ``max_fitness`` and ``evaluate``."""
    rng = np.random.default_rng(seed)
    n = landscape.n_bits
    if n > 62:
        raise ValueError("genotypes wider than 62 bits are not supported by the GA")
    target = landscape.max_fitness
    pop_size = params.population
    half = pop_size // 2

    pop = rng.integers(0, 1 << n, size=pop_size, dtype=np.int64)
    fit = np.asarray(landscape.evaluate(pop), dtype=np.float64)
    best = float(fit.max())
    evaluations = pop_size
    if params.elitism:
        elite = pop[np.argmax(fit)]

    for _ in range(params.generations):
        if best == target:
            break
        parents = _select(fit, pop_size, params.tournament, rng).reshape(half, 2)
        a, b = pop[parents[:, 0]], pop[parents[:, 1]]
        cross = rng.random(half) < params.crossover_rate
        cut = rng.integers(1, n, size=half) if n > 1 else np.zeros(half, dtype=np.int64)
        low = (np.int64(1) << cut) - 1
        c1 = np.where(cross, (a & low) | (b & ~low), a)
        c2 = np.where(cross, (b & low) | (a & ~low), b)
        children = np.concatenate([c1, c2])
        flip = rng.random(pop_size) < params.mutation_rate
        bits = rng.integers(0, n, size=pop_size)
        children = np.where(flip, children ^ (np.int64(1) << bits), children)
        if params.elitism:
            children[0] = elite
        pop = children
        fit = np.asarray(landscape.evaluate(pop), dtype=np.float64)
        evaluations += pop_size
        best = max(best, float(fit.max()))
        if params.elitism:
            elite = pop[np.argmax(fit)]
    return RunResult(best == target, best, evaluations)


def run_seed(base_seed: int, run_index: int) -> int:
    return int(base_seed) ^ int(run_index)


def _count_successes(landscape, params: GaParams, base_seed: int, indices) -> int:
    return sum(ga_run(landscape, params, run_seed(base_seed, i)).success for i in indices)


def success_rate(
    landscape, params: GaParams, base_seed: int, jobs: int = 1
) -> tuple[float, float]:
    """Fraction of successful runs and its 95% normal-approximation half-width."""
    runs = params.runs
    if jobs > 1:
        chunks = [range(j, runs, jobs) for j in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = sum(pool.map(_count_successes, [landscape] * jobs, [params] * jobs,
                                [base_seed] * jobs, chunks))
    else:
        hits = _count_successes(landscape, params, base_seed, range(runs))
    rate = hits / runs
    return rate, 1.96 * math.sqrt(rate * (1 - rate) / runs)
