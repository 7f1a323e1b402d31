from .density import density, density_hull
from .fractal import box_counting_dimension, box_counts
from .incremental import EntropyTracker
from .information import (
    H_MAX,
    PATTERN_SPACE,
    GridTooSmallError,
    distinct_patterns,
    entropy,
    histogram_entropy,
    information,
    window_histogram,
)
from .measure import DensityMode, measure
from .permeability import max_permeability_load, permeability, raw_permeability

__all__ = [
    "H_MAX",
    "PATTERN_SPACE",
    "DensityMode",
    "EntropyTracker",
    "GridTooSmallError",
    "box_counting_dimension",
    "box_counts",
    "density",
    "density_hull",
    "distinct_patterns",
    "entropy",
    "histogram_entropy",
    "information",
    "max_permeability_load",
    "measure",
    "permeability",
    "raw_permeability",
    "window_histogram",
]
