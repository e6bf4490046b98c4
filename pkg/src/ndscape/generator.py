"""Exhaustive construction of a landscape that follows a target neutral-degree
distribution.

Genotypes are visited in order of Hamming distance from a random seed
solution. Each visited genotype draws a neutral degree from the remaining
budget among the degrees it can still realize, gets that degree exactly by
handing its fitness to some unaffected neighbours, and is then frozen: every
other unaffected neighbour records the value as forbidden so later
assignments cannot change the frozen degree.

Which neighbours receive the value is left open by the construction itself;
see ``generate_nd`` for the two rules on offer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import Landscape, check_distribution, popcount

MAX_BITS = 16
RECIPIENT_RULES = ("uniform", "aligned")


@njit(cache=True)
def _roulette(weights, feasible, u):
    total = 0.0
    for d in range(len(weights)):
        if feasible[d] and weights[d] > 0.0:
            total += weights[d]
    if total > 0.0:
        target = u * total
        acc = 0.0
        last = -1
        for d in range(len(weights)):
            if feasible[d] and weights[d] > 0.0:
                acc += weights[d]
                last = d
                if target < acc:
                    return d
        return last
    # budget exhausted on every feasible degree: uniform fallback
    count = 0
    for d in range(len(weights)):
        if feasible[d]:
            count += 1
    if count == 0:
        return -1
    k = min(int(u * count), count - 1)
    for d in range(len(weights)):
        if feasible[d]:
            if k == 0:
                return d
            k -= 1
    return -1


@njit(cache=True)
def _is_forbidden(forbidden, n_forbidden, h, value):
    for j in range(n_forbidden[h]):
        if forbidden[h, j] == value:
            return True
    return False


@njit(cache=True)
def _value_range(fitness, affected, forbidden, n_forbidden, n_bits, s, v):
    """Degrees ``a..a+u`` that ``s`` can reach while holding ``v``."""
    a = 0
    u = 0
    for i in range(n_bits):
        h = s ^ (1 << i)
        if affected[h]:
            if fitness[h] == v:
                a += 1
        elif not _is_forbidden(forbidden, n_forbidden, h, v):
            u += 1
    return a, u


@njit(cache=True)
def _candidates(fitness, affected, forbidden, n_forbidden, n_bits, s, join, values, lows, highs):
    """Fill the values ``s`` may hold, with their degree ranges; return the count.

    An affected ``s`` keeps its value. An unaffected ``s`` may take a fresh
    value (NaN here), which nobody forbids, or, with ``join``, the value of an
    affected neighbour that is not forbidden at ``s``.
    """
    if affected[s]:
        a, u = _value_range(fitness, affected, forbidden, n_forbidden, n_bits, s, fitness[s])
        values[0] = fitness[s]
        lows[0] = a
        highs[0] = a + u
        return 1
    free = 0
    for i in range(n_bits):
        if not affected[s ^ (1 << i)]:
            free += 1
    values[0] = np.nan
    lows[0] = 0
    highs[0] = free
    m = 1
    if not join:
        return m
    for i in range(n_bits):
        h = s ^ (1 << i)
        if not affected[h]:
            continue
        v = fitness[h]
        if _is_forbidden(forbidden, n_forbidden, s, v):
            continue
        seen = False
        for j in range(1, m):
            if values[j] == v:
                seen = True
        if seen:
            continue
        a, u = _value_range(fitness, affected, forbidden, n_forbidden, n_bits, s, v)
        values[m] = v
        lows[m] = a
        highs[m] = a + u
        m += 1
    return m


@njit(cache=True)
def _fresh(used):
    v = np.random.random()
    while v in used:
        v = np.random.random()
    used.add(v)
    return v


@njit(cache=True)
def _bit_index(x):
    i = 0
    while x > 1:
        x >>= 1
        i += 1
    return i


@njit(cache=True)
def _generate(n_bits, budget, order, seed, join, aligned):
    np.random.seed(seed)
    size = 1 << n_bits
    fitness = np.zeros(size)
    affected = np.zeros(size, dtype=np.bool_)
    forbidden = np.empty((size, n_bits))
    n_forbidden = np.zeros(size, dtype=np.int64)
    sampled = np.empty(size, dtype=np.int64)
    used = {-1.0}
    feasible = np.zeros(n_bits + 1, dtype=np.bool_)
    admissible = np.empty(n_bits, dtype=np.int64)
    values = np.empty(n_bits + 1)
    lows = np.empty(n_bits + 1, dtype=np.int64)
    highs = np.empty(n_bits + 1, dtype=np.int64)
    step = 1.0 / size
    # bit directions each network has grown along, keyed by its value
    directions = {-1.0: np.int64(0)}

    for s in order:
        m = _candidates(fitness, affected, forbidden, n_forbidden, n_bits, s, join,
                        values, lows, highs)
        feasible[:] = False
        for j in range(m):
            feasible[lows[j]:highs[j] + 1] = True
        n = _roulette(budget, feasible, np.random.random())

        if not affected[s]:
            # uniform among the candidate values able to realize n
            k = 0
            for j in range(m):
                if lows[j] <= n <= highs[j]:
                    k += 1
            pick = np.random.randint(0, k)
            v = np.nan
            for j in range(m):
                if lows[j] <= n <= highs[j]:
                    if pick == 0:
                        v = values[j]
                        break
                    pick -= 1
            if np.isnan(v):
                v = _fresh(used)
            fitness[s] = v
            affected[s] = True
        v = fitness[s]

        a = 0
        m = 0
        for i in range(n_bits):
            h = s ^ (1 << i)
            if affected[h]:
                if fitness[h] == v:
                    a += 1
            elif not _is_forbidden(forbidden, n_forbidden, h, v):
                admissible[m] = h
                m += 1
        if aligned:
            # admissible neighbours along the network's known directions go first
            mask = directions.get(v, np.int64(0))
            for i in range(n_bits):
                h = s ^ (1 << i)
                if affected[h] and fitness[h] == v:
                    mask |= np.int64(1) << i
            front = 0
            for j in range(m):
                if (mask >> _bit_index(s ^ admissible[j])) & 1:
                    h = admissible[j]
                    admissible[j] = admissible[front]
                    admissible[front] = h
                    front += 1
        else:
            front = 0
            mask = np.int64(0)
        # partial Fisher-Yates: the first n - a admissible neighbours receive v
        for j in range(n - a):
            if j < front:
                k = j + np.random.randint(0, front - j)
            else:
                k = j + np.random.randint(0, m - j)
            h = admissible[k]
            admissible[k] = admissible[j]
            admissible[j] = h
            h = admissible[j]
            fitness[h] = v
            affected[h] = True
            mask |= np.int64(1) << _bit_index(s ^ h)
        if aligned:
            directions[v] = mask
        for j in range(n - a, m):
            h = admissible[j]
            forbidden[h, n_forbidden[h]] = v
            n_forbidden[h] += 1

        budget[n] -= step
        sampled[s] = n

    for s in range(size):
        if not affected[s]:
            fitness[s] = _fresh(used)
            affected[s] = True
    return fitness, sampled


@dataclass
class GenerationState:
    """Mid-construction state, mostly useful for inspecting single steps.

    ``fitness`` is meaningful only where ``affected`` is set. ``forbidden``
    holds up to ``n_bits`` values per genotype, ``n_forbidden`` how many are
    in use.
    """

    n_bits: int
    fitness: np.ndarray
    affected: np.ndarray
    forbidden: np.ndarray
    n_forbidden: np.ndarray

    @classmethod
    def empty(cls, n_bits: int) -> "GenerationState":
        size = 1 << n_bits
        return cls(
            n_bits,
            np.zeros(size),
            np.zeros(size, dtype=np.bool_),
            np.empty((size, n_bits)),
            np.zeros(size, dtype=np.int64),
        )

    def assign(self, g: int, value: float) -> None:
        self.fitness[g] = value
        self.affected[g] = True

    def forbid(self, g: int, value: float) -> None:
        self.forbidden[g, self.n_forbidden[g]] = value
        self.n_forbidden[g] += 1


def feasible_degrees(state: GenerationState, s: int, join: bool = False) -> set[int]:
    """Neutral degrees ``s`` can still be given without touching frozen degrees."""
    n = state.n_bits
    values = np.empty(n + 1)
    lows = np.empty(n + 1, dtype=np.int64)
    highs = np.empty(n + 1, dtype=np.int64)
    m = _candidates(
        state.fitness, state.affected, state.forbidden, state.n_forbidden, n, s, join,
        values, lows, highs,
    )
    return {d for j in range(m) for d in range(lows[j], highs[j] + 1)}


def roulette_wheel(weights, feasible, rng: np.random.Generator) -> int:
    """Sample a degree from ``weights`` restricted to the ``feasible`` degrees.

    Negative weights count as zero. When no feasible degree has positive
    weight the draw is uniform over the feasible set.
    """
    w = np.asarray(weights, dtype=np.float64)
    mask = np.zeros(len(w), dtype=np.bool_)
    for d in feasible:
        if not 0 <= d < len(w):
            raise ValueError(f"degree {d} outside 0..{len(w) - 1}")
        mask[d] = True
    if not mask.any():
        raise ValueError("no feasible degree to sample from")
    return int(_roulette(w, mask, rng.random()))


def candidate_order(n_bits: int, s0: int) -> np.ndarray:
    """Genotypes by Hamming distance from ``s0``; ties by ascending value."""
    idx = np.arange(1 << n_bits, dtype=np.int64)
    return idx[np.lexsort((idx, popcount(idx ^ s0)))]


@dataclass(frozen=True)
class ConstructionLog:
    order: np.ndarray  # genotypes in processing order
    sampled: np.ndarray  # sampled degree, indexed by genotype


def generate_nd(
    n_bits: int,
    target,
    rng: np.random.Generator,
    allow_large: bool = False,
    return_log: bool = False,
    join: bool = False,
    recipients: str = "aligned",
):
    """Build a landscape whose neutral-degree distribution approximates ``target``.

    Every neutral network of the result carries its own fitness value, drawn
    uniformly from ``[0, 1)``. With ``return_log`` the processing order and
    the degree sampled for each genotype are returned as well.

    ``recipients`` picks which unaffected neighbours receive a genotype's
    value. ``"uniform"`` draws them uniformly among the admissible ones.
    ``"aligned"`` (the default) first draws among neighbours lying along bit
    directions the network has already grown in, so networks stay close to
    subcubes instead of sprawling across the space; the choice is still
    uniform within each group.

    With ``join`` an unaffected genotype may also adopt the value of an
    affected neighbour instead of a fresh one, which widens the degrees it can
    reach late in the sweep but tends to fuse networks.
    """
    if recipients not in RECIPIENT_RULES:
        raise ValueError(f"recipients must be one of {RECIPIENT_RULES}, got {recipients!r}")
    if n_bits < 1:
        raise ValueError(f"n_bits must be >= 1, got {n_bits}")
    if n_bits > MAX_BITS and not allow_large:
        raise ValueError(
            f"n_bits={n_bits} exceeds {MAX_BITS}; pass allow_large=True to build it anyway"
        )
    budget = check_distribution(target, n_bits).copy()
    s0 = int(rng.integers(1 << n_bits))
    order = candidate_order(n_bits, s0)
    seed = int(rng.integers(2**32))
    fitness, sampled = _generate(n_bits, budget, order, seed, join, recipients == "aligned")
    land = Landscape(n_bits, fitness)
    if return_log:
        return land, ConstructionLog(order, sampled)
    return land
