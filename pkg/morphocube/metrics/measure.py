import logging
from typing import Optional

from morphocube.schema.grid import Grid
from morphocube.schema.layout import Category, DensityMode, MorphoPoint

from .density import density, density_hull
from .information import information
from .permeability import permeability

logger = logging.getLogger(__name__)


def measure(
    grid: Grid,
    density_mode: DensityMode = "global",
    label: str = "grid",
    population: Optional[int] = None,
    *,
    category: Optional[Category] = None,
    workers: int = 1,
) -> MorphoPoint:
    """
    Places a grid in morphospace.

    Args:
        grid: The footprint grid, at least 4x4.
        density_mode: ``global`` divides by every cell, ``hull`` by the convex hull of the
            buildings, for settlements smaller than the analysis window.
        label: Name of the point.
        population: Optional pass-through, used only to size plotted dots.
        category: Optional settlement category.
        workers: Threads used for window scanning.

    Raises:
        GridTooSmallError: The grid is smaller than 4x4.
        EmptySettlementError: Hull density was requested for a grid without buildings.
    """
    if density_mode == "global":
        de = density(grid)
    elif density_mode == "hull":
        de = density_hull(grid)
    else:
        raise ValueError(f"Unknown density mode: {density_mode}")

    point = MorphoPoint(
        label=label,
        De=de,
        iPe=permeability(grid),
        I=information(grid, workers=workers),
        population=population,
        category=category,
    )

    logger.info("Measured %s: De=%.6f iPe=%.6f I=%.6f", label, point.De, point.iPe, point.I)

    return point
