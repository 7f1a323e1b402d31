"""Top-level package for Morphocube."""

__version__ = "0.1.0"

from morphocube.generators import generate, trajectory  # noqa
from morphocube.metrics import measure  # noqa
from morphocube.raster import load_raster, resample, rotate90, save_raster  # noqa
from morphocube.schema import BandSpec, GenSpec, Grid, MorphoDataset, MorphoPoint  # noqa
from morphocube.space import classify, cluster, emit_csv, emit_svg_scatter, load_csv  # noqa

__all__ = [
    "BandSpec",
    "GenSpec",
    "Grid",
    "MorphoDataset",
    "MorphoPoint",
    "classify",
    "cluster",
    "emit_csv",
    "emit_svg_scatter",
    "generate",
    "load_csv",
    "load_raster",
    "measure",
    "resample",
    "rotate90",
    "save_raster",
    "trajectory",
]
