from .generation import DEFAULT_SEED, AnnealStep, AnnealTrace, GenSpec, GrowthResult
from .grid import Grid, RasterFormat
from .layout import AXES, BandSpec, Block, DensityMode, MorphoDataset, MorphoPoint, WindowHistogram
from .run import RunConfig

__all__ = [
    "AXES",
    "DEFAULT_SEED",
    "AnnealStep",
    "AnnealTrace",
    "BandSpec",
    "Block",
    "DensityMode",
    "GenSpec",
    "Grid",
    "GrowthResult",
    "MorphoDataset",
    "MorphoPoint",
    "RasterFormat",
    "RunConfig",
    "WindowHistogram",
]
