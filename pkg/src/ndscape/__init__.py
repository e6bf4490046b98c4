"""Fitness landscapes with a prescribed neutral-degree distribution."""

from .core import (
    IncompatibleDimensions,
    Landscape,
    degree_distribution,
    neutral_degrees,
    partition,
    rms_distance,
)
from .extension import ExtendedLandscape, convolve, extend
from .generator import generate_nd
from .annealer import AnnealSchedule, refine
from .netfit import DECEPTIVE, EASY, TrapParams, assign_trap, window_distribution
from .analysis import fdc
from .ga import GaParams, ga_run, success_rate
from .pipeline import build_nd, trap_landscape

__version__ = "0.1.0"

__all__ = [
    "AnnealSchedule", "DECEPTIVE", "EASY", "ExtendedLandscape", "GaParams",
    "IncompatibleDimensions", "Landscape", "TrapParams", "assign_trap", "build_nd",
    "convolve", "degree_distribution", "extend", "fdc", "ga_run", "generate_nd",
    "neutral_degrees", "partition", "refine", "rms_distance", "success_rate",
    "trap_landscape", "window_distribution",
]
