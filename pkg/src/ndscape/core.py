"""Bitstring search space, exhaustive landscapes, neutral degrees and networks.

Genotypes are plain integers in ``[0, 2**n_bits)``; locus ``i`` is bit ``i``
of the integer (least significant bit is locus 0). A degree distribution is a
1-D float array of length ``n_bits + 1`` indexed by neutral degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

NORMALIZATION_TOL = 1e-9


class IncompatibleDimensions(ValueError):
    """Two objects disagree on the number of bits."""


@dataclass(frozen=True, eq=False)
class Landscape:
    """Exhaustive fitness table over ``{0,1}**n_bits``."""

    n_bits: int
    fitness: np.ndarray

    def __post_init__(self):
        if self.n_bits < 1:
            raise ValueError(f"n_bits must be >= 1, got {self.n_bits}")
        fit = np.ascontiguousarray(self.fitness, dtype=np.float64)
        if fit.shape != (1 << self.n_bits,):
            raise ValueError(
                f"fitness must have 2**{self.n_bits} entries, got shape {fit.shape}"
            )
        if not np.all(np.isfinite(fit)):
            raise ValueError("fitness values must be finite")
        fit.setflags(write=False)
        object.__setattr__(self, "fitness", fit)

    @property
    def size(self) -> int:
        return 1 << self.n_bits

    @property
    def max_fitness(self) -> float:
        return float(self.fitness.max())

    def evaluate(self, genotypes):
        return self.fitness[np.asarray(genotypes, dtype=np.int64)]

    def __eq__(self, other):
        if not isinstance(other, Landscape):
            return NotImplemented
        return self.n_bits == other.n_bits and np.array_equal(self.fitness, other.fitness)

    def __hash__(self):
        return hash((self.n_bits, self.fitness.tobytes()))


@dataclass(frozen=True, eq=False)
class NeutralNetwork:
    members: np.ndarray  # sorted genotype indices
    fitness: float
    centroid: np.ndarray

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True, eq=False)
class NetworkPartition:
    """Array form of the neutral-network partition of a landscape.

    Networks are numbered by their smallest member, so ``labels[0] == 0``
    and network ids increase with first appearance in genotype order.
    """

    n_bits: int
    labels: np.ndarray
    sizes: np.ndarray
    fitness: np.ndarray
    centroids: np.ndarray = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self, network_id: int) -> np.ndarray:
        return np.flatnonzero(self.labels == network_id)

    def adjacent_pairs(self) -> np.ndarray:
        """Unique ``(a, b)`` network-id pairs, ``a < b``, joined by a Hamming-1 edge."""
        idx = np.arange(1 << self.n_bits, dtype=np.int64)
        pairs = []
        for i in range(self.n_bits):
            lo = idx[(idx >> i) & 1 == 0]
            a, b = self.labels[lo], self.labels[lo | (1 << i)]
            diff = a != b
            pairs.append(np.stack([np.minimum(a[diff], b[diff]), np.maximum(a[diff], b[diff])], 1))
        if not pairs:
            return np.empty((0, 2), dtype=np.int64)
        return np.unique(np.concatenate(pairs), axis=0)


def genotype_indices(n_bits: int) -> np.ndarray:
    return np.arange(1 << n_bits, dtype=np.int64)


def popcount(values) -> np.ndarray:
    v = np.asarray(values, dtype=np.uint64)
    return np.bitwise_count(v).astype(np.int64)


def neighbors(g: int, n_bits: int) -> list[int]:
    """Hamming-1 neighbours of ``g``, ordered by flipped locus."""
    return [g ^ (1 << i) for i in range(n_bits)]


def neutral_degree(landscape: Landscape, g: int) -> int:
    fit = landscape.fitness
    return sum(1 for h in neighbors(g, landscape.n_bits) if fit[h] == fit[g])


def neutral_degrees(landscape: Landscape) -> np.ndarray:
    """Neutral degree of every genotype, vectorised over the whole space."""
    fit = landscape.fitness
    idx = genotype_indices(landscape.n_bits)
    deg = np.zeros(landscape.size, dtype=np.int64)
    for i in range(landscape.n_bits):
        deg += fit == fit[idx ^ (1 << i)]
    return deg


def degree_counts(landscape: Landscape) -> np.ndarray:
    return np.bincount(neutral_degrees(landscape), minlength=landscape.n_bits + 1)


def degree_distribution(landscape: Landscape) -> np.ndarray:
    return degree_counts(landscape) / landscape.size


def check_distribution(weights, n_bits: int | None = None) -> np.ndarray:
    """Validate a normalized degree distribution and return it as a float array."""
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or len(w) < 1:
        raise ValueError("a degree distribution is a non-empty 1-D sequence")
    if n_bits is not None and len(w) != n_bits + 1:
        raise IncompatibleDimensions(
            f"distribution has {len(w)} entries, expected {n_bits + 1} for N={n_bits}"
        )
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ValueError("distribution weights must be finite and non-negative")
    if abs(w.sum() - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"distribution is not normalized (sum={w.sum()!r})")
    return w


def rms_distance(d1, d2) -> float:
    # Euclidean norm of the difference; no division by the number of bins.
    a = np.asarray(d1, dtype=np.float64)
    b = np.asarray(d2, dtype=np.float64)
    if a.shape != b.shape:
        raise IncompatibleDimensions(
            f"distributions of length {len(a)} and {len(b)} describe different N"
        )
    return float(np.sqrt(np.sum((a - b) ** 2)))


def distribution_stats(weights) -> tuple[float, float]:
    """Mean and standard deviation of a normalized degree distribution."""
    w = check_distribution(weights)
    d = np.arange(len(w))
    mean = float(np.dot(d, w))
    var = float(np.dot(d * d, w)) - mean * mean
    return mean, float(np.sqrt(max(var, 0.0)))


def partition(landscape: Landscape) -> NetworkPartition:
    """Connected components of the equal-fitness bit-flip graph."""
    n, size = landscape.n_bits, landscape.size
    fit = landscape.fitness
    idx = genotype_indices(n)
    rows, cols = [], []
    for i in range(n):
        lo = idx[(idx >> i) & 1 == 0]
        hi = lo | (1 << i)
        eq = fit[lo] == fit[hi]
        rows.append(lo[eq])
        cols.append(hi[eq])
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(size, size))
    ncomp, raw = connected_components(graph, directed=False)

    # Relabel so that network ids follow the smallest member.
    first = np.full(ncomp, size, dtype=np.int64)
    np.minimum.at(first, raw, idx)
    order = np.argsort(first, kind="stable")
    relabel = np.empty(ncomp, dtype=np.int64)
    relabel[order] = np.arange(ncomp)
    labels = relabel[raw]

    sizes = np.bincount(labels, minlength=ncomp)
    centroids = np.empty((ncomp, n), dtype=np.float64)
    for i in range(n):
        centroids[:, i] = np.bincount(labels, weights=(idx >> i) & 1, minlength=ncomp)
    centroids /= sizes[:, None]
    return NetworkPartition(
        n_bits=n,
        labels=labels,
        sizes=sizes,
        fitness=fit[first[order]].copy(),
        centroids=centroids,
    )


def extract_networks(landscape: Landscape) -> list[NeutralNetwork]:
    part = partition(landscape)
    order = np.argsort(part.labels, kind="stable")
    bounds = np.concatenate([[0], np.cumsum(part.sizes)])
    return [
        NeutralNetwork(
            members=order[bounds[k]:bounds[k + 1]],
            fitness=float(part.fitness[k]),
            centroid=part.centroids[k],
        )
        for k in range(part.count)
    ]
