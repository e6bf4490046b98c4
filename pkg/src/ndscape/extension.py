"""Additive extended landscapes.

A genotype of the extended space is the concatenation of component genotypes,
lowest bits first in component order. Fitness is the sum of component
fitnesses; a move flips one bit, hence changes exactly one component slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .core import Landscape, check_distribution, degree_distribution

MAX_FLATTEN_BITS = 20


def convolve(d1, d2) -> np.ndarray:
    """Degree distribution of a sum of independent degrees."""
    a = check_distribution(d1)
    b = check_distribution(d2)
    return np.convolve(a, b)


@dataclass(frozen=True)
class ExtendedLandscape:
    components: tuple[Landscape, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("an extended landscape needs at least one component")
        for c in comps:
            if not isinstance(c, Landscape):
                raise TypeError(f"components must be Landscape objects, got {type(c).__name__}")
        object.__setattr__(self, "components", comps)

    @property
    def n_bits(self) -> int:
        return sum(c.n_bits for c in self.components)

    total_bits = n_bits

    @property
    def offsets(self) -> list[int]:
        out, pos = [], 0
        for c in self.components:
            out.append(pos)
            pos += c.n_bits
        return out

    @property
    def max_fitness(self) -> float:
        return float(sum(c.fitness.max() for c in self.components))

    def evaluate(self, genotypes):
        """Additive fitness of one genotype (int) or an integer array of them."""
        if np.isscalar(genotypes):
            return extended_eval(self, int(genotypes))
        g = np.asarray(genotypes, dtype=np.uint64)
        total = np.zeros(g.shape, dtype=np.float64)
        for comp, off in zip(self.components, self.offsets):
            mask = np.uint64((1 << comp.n_bits) - 1)
            total += comp.fitness[((g >> np.uint64(off)) & mask).astype(np.int64)]
        return total

    def flatten(self) -> Landscape:
        if self.n_bits > MAX_FLATTEN_BITS:
            raise ValueError(
                f"refusing to materialize 2**{self.n_bits} genotypes (limit {MAX_FLATTEN_BITS} bits)"
            )
        return Landscape(self.n_bits, self.evaluate(np.arange(1 << self.n_bits, dtype=np.uint64)))


def _components(p) -> tuple[Landscape, ...]:
    if isinstance(p, ExtendedLandscape):
        return p.components
    if isinstance(p, Landscape):
        return (p,)
    raise TypeError(f"cannot extend a {type(p).__name__}")


def extend(*parts) -> ExtendedLandscape:
    """Concatenate landscapes (or extended landscapes) into a flat extended one."""
    comps = tuple(c for p in parts for c in _components(p))
    return ExtendedLandscape(comps)


def extended_eval(extended: ExtendedLandscape, g: int) -> float:
    total = 0.0
    for comp in extended.components:
        total += comp.fitness[g & ((1 << comp.n_bits) - 1)]
        g >>= comp.n_bits
    return float(total)


def extended_distribution(extended: ExtendedLandscape) -> np.ndarray:
    """Exact degree distribution, folded from component distributions."""
    return reduce(convolve, (degree_distribution(c) for c in extended.components))
