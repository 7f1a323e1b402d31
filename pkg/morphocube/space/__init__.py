from .bands import (
    DEFAULT_BANDS,
    UNOCCUPIED,
    BandTableError,
    classify,
    distance_to_band,
    load_bands,
    nearest_band,
    parse_bands,
)
from .clustering import ClusterCountError, cluster
from .dataset import CSV_COLUMNS, DatasetFormatError, dataset_from_csv, dataset_to_csv, emit_csv, load_csv
from .plot import AxisError, emit_pairwise_svgs, emit_svg_scatter, render_svg_scatter

__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_BANDS",
    "UNOCCUPIED",
    "AxisError",
    "BandTableError",
    "ClusterCountError",
    "DatasetFormatError",
    "classify",
    "cluster",
    "dataset_from_csv",
    "dataset_to_csv",
    "distance_to_band",
    "emit_csv",
    "emit_pairwise_svgs",
    "emit_svg_scatter",
    "load_bands",
    "load_csv",
    "nearest_band",
    "parse_bands",
    "render_svg_scatter",
]
