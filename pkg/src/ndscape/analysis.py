"""Search-difficulty measures: fitness-distance correlation and network sizes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Landscape, genotype_indices, partition

# Jones' classification threshold
FDC_THRESHOLD = 0.15


class FdcUndefined(ValueError):
    pass


def classify(fdc_value: float) -> str:
    if fdc_value >= FDC_THRESHOLD:
        return "deceptive"
    if fdc_value <= -FDC_THRESHOLD:
        return "easy"
    return "hard"


@dataclass(frozen=True)
class FdcReport:
    fdc: float
    classification: str
    m: int
    optima_count: int


def distances_to_set(n_bits: int, sources) -> np.ndarray:
    """Hamming distance from every genotype to the nearest of ``sources``.

    Multi-source breadth-first search over the hypercube, one layer at a time.
    """
    size = 1 << n_bits
    dist = np.full(size, -1, dtype=np.int64)
    frontier = np.zeros(size, dtype=bool)
    frontier[np.asarray(sources, dtype=np.int64)] = True
    if not frontier.any():
        raise ValueError("at least one source genotype is required")
    idx = genotype_indices(n_bits)
    level = 0
    while frontier.any():
        dist[frontier] = level
        nxt = np.zeros(size, dtype=bool)
        for i in range(n_bits):
            nxt |= frontier[idx ^ (1 << i)]
        frontier = nxt & (dist < 0)
        level += 1
    return dist


def optimal_set(landscape: Landscape) -> np.ndarray:
    return np.flatnonzero(landscape.fitness == landscape.fitness.max())


def fdc(landscape: Landscape) -> FdcReport:
    """Exhaustive fitness-distance correlation against the set of global optima."""
    opt = optimal_set(landscape)
    d = distances_to_set(landscape.n_bits, opt).astype(np.float64)
    f = landscape.fitness
    # constancy is tested exactly; std() of a constant array can round above 0
    if np.all(f == f[0]):
        raise FdcUndefined("FDC undefined: fitness has zero variance")
    if np.all(d == d[0]):
        raise FdcUndefined("FDC undefined: distance has zero variance")
    sf, sd = f.std(), d.std()
    cov = np.mean((f - f.mean()) * (d - d.mean()))
    value = float(np.clip(cov / (sf * sd), -1.0, 1.0))
    return FdcReport(value, classify(value), landscape.size, len(opt))


def fdc_scatter(
    landscape: Landscape, sample: int, rng: np.random.Generator | None = None
) -> list[tuple[int, float]]:
    """``(distance, fitness)`` pairs for ``sample`` genotypes drawn without replacement."""
    size = landscape.size
    if not 1 <= sample <= size:
        raise ValueError(f"sample must lie in 1..{size}")
    if sample == size:
        chosen = genotype_indices(landscape.n_bits)
    else:
        rng = rng if rng is not None else np.random.default_rng()
        chosen = np.sort(rng.choice(size, size=sample, replace=False))
    d = distances_to_set(landscape.n_bits, optimal_set(landscape))
    return [(int(d[g]), float(landscape.fitness[g])) for g in chosen]


def network_size_ranking(landscape: Landscape) -> list[tuple[int, int]]:
    sizes = np.sort(partition(landscape).sizes)[::-1]
    return [(rank, int(sz)) for rank, sz in enumerate(sizes, start=1)]
