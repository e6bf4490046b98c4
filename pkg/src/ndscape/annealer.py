"""Simulated-annealing refinement of a landscape toward a target degree distribution.

A move rewrites the fitness of one genotype, either copying a neighbour's
value (networks may merge) or drawing a fresh uniform value (networks may
split). Only the moved genotype and its neighbours change degree, so the
degree histogram is maintained incrementally. The best state seen is kept
aside (synced from the genotypes touched since it was last improved) and is
what the chain returns.

Acceptance is Metropolis on the *squared* distance. One move shifts a few
histogram entries by ``1/2**N``, so a squared-distance step is of order
``1/2**N`` whatever the current distance, and a temperature in those units
behaves the same for easy and hard targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import IncompatibleDimensions, Landscape, check_distribution, neutral_degrees


@dataclass(frozen=True)
class AnnealSchedule:
    initial_temperature: float
    cooling_factor: float
    moves_per_epoch: int
    total_moves: int

    def __post_init__(self):
        if not self.initial_temperature > 0:
            raise ValueError("initial_temperature must be positive")
        if not 0 < self.cooling_factor < 1:
            raise ValueError("cooling_factor must lie in (0, 1)")
        if self.moves_per_epoch < 1:
            raise ValueError("moves_per_epoch must be >= 1")
        if self.total_moves < 1:
            raise ValueError("total_moves must be >= 1")

    @classmethod
    def default(cls, n_bits: int, total_moves: int | None = None) -> "AnnealSchedule":
        """Epochs of ``2**N`` moves; temperature falls tenfold over the run."""
        size = 1 << n_bits
        total = DEFAULT_EPOCHS * size if total_moves is None else int(total_moves)
        epochs = max(total // size, 1)
        return cls(
            initial_temperature=DEFAULT_TEMPERATURE_SCALE / size,
            cooling_factor=DEFAULT_COOLING_SPAN ** (1.0 / epochs),
            moves_per_epoch=size,
            total_moves=total,
        )


# initial temperature in units of 1/2**N (squared-distance scale)
DEFAULT_TEMPERATURE_SCALE = 0.03
DEFAULT_COOLING_SPAN = 0.1
# longer runs barely lower the distance but let networks coarsen into a few giants
DEFAULT_EPOCHS = 256


@njit(cache=True)
def _delta(fitness, n_bits, s, new_value, out_g, out_old, out_new, degrees):
    """Write the degree changes caused by setting ``s`` to ``new_value``.

    Returns the number of entries written (0 for a no-op move).
    """
    old_value = fitness[s]
    if new_value == old_value:
        return 0
    k = 0
    new_s = 0
    for i in range(n_bits):
        h = s ^ (1 << i)
        fh = fitness[h]
        was = fh == old_value
        now = fh == new_value
        if now:
            new_s += 1
        if was != now:
            out_g[k] = h
            out_old[k] = degrees[h]
            out_new[k] = degrees[h] + (1 if now else -1)
            k += 1
    if new_s != degrees[s]:
        out_g[k] = s
        out_old[k] = degrees[s]
        out_new[k] = new_s
        k += 1
    return k


@njit(cache=True)
def _energy(counts, target, inv_size):
    acc = 0.0
    for d in range(len(target)):
        diff = counts[d] * inv_size - target[d]
        acc += diff * diff
    return math.sqrt(acc)


@njit(cache=True)
def _anneal(fitness, degrees, counts, n_bits, target, t0, cooling, per_epoch, total, seed, trace):
    np.random.seed(seed)
    size = 1 << n_bits
    inv_size = 1.0 / size
    out_g = np.empty(n_bits + 1, dtype=np.int64)
    out_old = np.empty(n_bits + 1, dtype=np.int64)
    out_new = np.empty(n_bits + 1, dtype=np.int64)

    best_fitness = fitness.copy()
    best_counts = counts.copy()
    # genotypes touched since the best state; past capacity, resync everything
    capacity = 4 * size
    touched = np.empty(capacity, dtype=np.int64)
    n_touched = 0
    overflow = False

    energy = _energy(counts, target, inv_size)
    best = energy
    temp = t0
    n_trace = 0
    for move in range(total):
        if move > 0 and move % per_epoch == 0:
            temp *= cooling
            trace[n_trace, 0] = move
            trace[n_trace, 1] = energy
            n_trace += 1
        s = np.random.randint(0, size)
        if np.random.random() < 0.5:
            new_value = fitness[s ^ (1 << np.random.randint(0, n_bits))]
        else:
            new_value = np.random.random()
        if new_value == fitness[s]:
            continue
        k = _delta(fitness, n_bits, s, new_value, out_g, out_old, out_new, degrees)
        if k > 0:
            for j in range(k):
                counts[out_old[j]] -= 1
                counts[out_new[j]] += 1
            trial = _energy(counts, target, inv_size)
            de = trial * trial - energy * energy
            if de > 0.0 and np.random.random() >= math.exp(-de / temp):
                for j in range(k):
                    counts[out_new[j]] -= 1
                    counts[out_old[j]] += 1
                continue
            for j in range(k):
                degrees[out_g[j]] = out_new[j]
            energy = trial
        fitness[s] = new_value
        if n_touched < capacity:
            touched[n_touched] = s
            n_touched += 1
        else:
            overflow = True
        if energy < best:
            best = energy
            best_counts[:] = counts
            if overflow:
                best_fitness[:] = fitness
            else:
                for j in range(n_touched):
                    best_fitness[touched[j]] = fitness[touched[j]]
            n_touched = 0
            overflow = False
    trace[n_trace, 0] = total
    trace[n_trace, 1] = energy
    n_trace += 1

    fitness[:] = best_fitness
    counts[:] = best_counts
    return best, n_trace


def degree_delta(landscape: Landscape, s: int, new_fitness: float) -> list[tuple[int, int, int]]:
    """``(genotype, old_degree, new_degree)`` for every degree the move changes."""
    n = landscape.n_bits
    degrees = neutral_degrees(landscape)
    out_g = np.empty(n + 1, dtype=np.int64)
    out_old = np.empty(n + 1, dtype=np.int64)
    out_new = np.empty(n + 1, dtype=np.int64)
    k = _delta(landscape.fitness, n, s, float(new_fitness), out_g, out_old, out_new, degrees)
    return [(int(out_g[j]), int(out_old[j]), int(out_new[j])) for j in range(k)]


@dataclass(frozen=True)
class RefineResult:
    landscape: Landscape
    energy: float
    initial_energy: float
    counts: np.ndarray  # incrementally maintained histogram of the returned landscape
    trace: np.ndarray  # (move, energy) at each epoch boundary and at the end


def refine(
    landscape: Landscape,
    target,
    schedule: AnnealSchedule | None = None,
    rng: np.random.Generator | None = None,
) -> RefineResult:
    """Anneal ``landscape`` toward ``target``; return the best landscape seen."""
    n = landscape.n_bits
    target = np.asarray(target, dtype=np.float64)
    if len(target) != n + 1:
        raise IncompatibleDimensions(
            f"target has {len(target)} entries but the landscape has N={n}"
        )
    target = check_distribution(target, n)
    schedule = schedule or AnnealSchedule.default(n)
    rng = rng if rng is not None else np.random.default_rng()

    fitness = landscape.fitness.copy()
    degrees = neutral_degrees(landscape)
    counts = np.bincount(degrees, minlength=n + 1).astype(np.int64)
    initial = _energy(counts, target, 1.0 / landscape.size)
    epochs = schedule.total_moves // schedule.moves_per_epoch + 2
    trace = np.zeros((epochs, 2))
    best, n_trace = _anneal(
        fitness, degrees, counts, n, target,
        schedule.initial_temperature, schedule.cooling_factor,
        schedule.moves_per_epoch, schedule.total_moves,
        int(rng.integers(2**32)), trace,
    )
    return RefineResult(Landscape(n, fitness), best, initial, counts, trace[:n_trace])
