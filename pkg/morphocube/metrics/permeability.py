"""
Permeability: the area-weighted block perimeter load on open space, inverted and
normalized so that 1 means unobstructed.

The normalizing maximum is the configuration of one solid block filling every cell
but a single open one: ``P = 4``, ``A = C_T - 1``, ``A_O = 1``, hence
``Pe_max = 4 * (C_T - 1)``.
"""

import logging

from morphocube.blocks import block_statistics
from morphocube.schema.grid import Grid

logger = logging.getLogger(__name__)


def max_permeability_load(grid: Grid) -> int:
    """Pe_max for the grid's dimensions"""
    return 4 * (grid.total_cells - 1)


def raw_permeability(grid: Grid) -> float:
    """
    Pe = sum(P_i * A_i) / A_O, or 0 when no block touches open space.
    """
    stats = block_statistics(grid)
    open_area = grid.total_cells - stats.built_area

    # A grid without open space has no built/open edge either
    if stats.weighted_perimeter == 0:
        return 0.0

    return stats.weighted_perimeter / open_area


def permeability(grid: Grid) -> float:
    """
    iPe = clamp(1 - Pe / Pe_max, 0, 1).

    A grid without open space scores 0 and a grid without built/open interfaces scores 1.
    """
    stats = block_statistics(grid)
    open_area = grid.total_cells - stats.built_area

    if open_area == 0:
        return 0.0

    if stats.weighted_perimeter == 0:
        return 1.0

    # Single division of exact integers keeps Pe == Pe_max at exactly 1
    normalized = stats.weighted_perimeter / (open_area * max_permeability_load(grid))

    return min(1.0, max(0.0, 1.0 - normalized))
