from morphocube.blocks import convex_hull_area
from morphocube.schema.grid import Grid


def density(grid: Grid) -> float:
    """De = BFc / C_T"""
    return grid.built_count / grid.total_cells


def density_hull(grid: Grid) -> float:
    """
    De = BFc / hull area, for settlements smaller than the analysis window.

    Raises:
        EmptySettlementError: There are no built cells.
    """
    return grid.built_count / convex_hull_area(grid)
