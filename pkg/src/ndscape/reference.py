"""Baseline neutral landscapes: Royal Road and the NK family."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Landscape, genotype_indices


def royal_road(n_bits: int, n_blocks: int, block_size: int) -> Landscape:
    """Fitness = number of contiguous ``block_size`` blocks whose bits are all 1."""
    if n_blocks < 1 or block_size < 1 or n_blocks * block_size != n_bits:
        raise ValueError(
            f"royal road needs n_bits = n_blocks * block_size, got {n_bits} != {n_blocks}*{block_size}"
        )
    idx = genotype_indices(n_bits)
    mask = (1 << block_size) - 1
    fit = np.zeros(len(idx))
    for j in range(n_blocks):
        fit += ((idx >> (j * block_size)) & mask) == mask
    return Landscape(n_bits, fit)


@dataclass(frozen=True)
class NkTables:
    n_bits: int
    k: int
    partners: np.ndarray  # (N, K) epistatic loci of each locus
    components: np.ndarray  # (N, 2**(K+1)) component values

    def __post_init__(self):
        if self.partners.shape != (self.n_bits, self.k):
            raise ValueError("partners must have shape (N, K)")
        if self.components.shape != (self.n_bits, 1 << (self.k + 1)):
            raise ValueError("components must have shape (N, 2**(K+1))")
        for i, row in enumerate(self.partners):
            if len(set(row.tolist())) != self.k or i in row:
                raise ValueError(f"locus {i} needs {self.k} distinct partners other than itself")

    def component_sum(self) -> np.ndarray:
        """Sum over loci of the component values, for every genotype."""
        idx = genotype_indices(self.n_bits)
        total = np.zeros(len(idx))
        for i in range(self.n_bits):
            key = (idx >> i) & 1
            for j, q in enumerate(self.partners[i]):
                key |= ((idx >> q) & 1) << (j + 1)
            total += self.components[i, key]
        return total

    def landscape(self) -> Landscape:
        return Landscape(self.n_bits, self.component_sum() / self.n_bits)


def random_partners(n_bits: int, k: int, rng: np.random.Generator) -> np.ndarray:
    partners = np.empty((n_bits, k), dtype=np.int64)
    for i in range(n_bits):
        others = np.delete(np.arange(n_bits), i)
        partners[i] = rng.choice(others, size=k, replace=False)
    return partners


def nk_tables(
    n_bits: int,
    k: int,
    rng: np.random.Generator,
    p: float | None = None,
    q: int | None = None,
) -> NkTables:
    """Random NK tables: plain by default, NKp with ``p``, NKq with ``q``."""
    if not 0 <= k < n_bits:
        raise ValueError(f"need 0 <= K < N, got K={k}, N={n_bits}")
    if p is not None and q is not None:
        raise ValueError("choose at most one of p (NKp) and q (NKq)")
    partners = random_partners(n_bits, k, rng)
    shape = (n_bits, 1 << (k + 1))
    if q is not None:
        if q < 2:
            raise ValueError(f"NKq needs q >= 2, got {q}")
        comps = rng.integers(0, q, size=shape).astype(np.float64)
    else:
        comps = rng.random(shape)
        if p is not None:
            if not 0 <= p <= 1:
                raise ValueError(f"NKp needs 0 <= p <= 1, got {p}")
            comps[rng.random(shape) < p] = 0.0
    return NkTables(n_bits, k, partners, comps)


def nk_family(
    n_bits: int,
    k: int,
    rng: np.random.Generator,
    p: float | None = None,
    q: int | None = None,
) -> Landscape:
    return nk_tables(n_bits, k, rng, p=p, q=q).landscape()


def technological(n_bits: int, k: int, m_levels: int, rng: np.random.Generator) -> Landscape:
    """Plain NK fitness quantized to ``m_levels`` values ``floor(f*M)/M``."""
    if m_levels < 1:
        raise ValueError(f"need at least one level, got M={m_levels}")
    f = nk_tables(n_bits, k, rng).landscape().fitness
    levels = np.minimum(np.floor(f * m_levels), m_levels - 1)
    return Landscape(n_bits, levels / m_levels)
