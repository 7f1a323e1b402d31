"""
Urban blocks as 4-connected components of built cells.

Perimeters count only edges shared between a built cell and an open cell that both
lie inside the grid; the grid boundary is an arbitrary crop and contributes nothing.
"""

import logging
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np
from scipy import ndimage

from morphocube.schema.grid import Grid
from morphocube.schema.layout import Block

logger = logging.getLogger(__name__)

FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)

Point = Tuple[int, int]


class EmptySettlementError(ValueError):
    def __init__(self, message: str = "empty settlement") -> None:
        super().__init__(message)


class BlockStatistics(NamedTuple):
    count: int
    weighted_perimeter: int  # sum of P_i * A_i
    built_area: int


def label_blocks(grid: Grid) -> Tuple[np.ndarray, int]:
    """
    Labels 4-connected built components in raster scan order, 1 based; open cells are 0.
    """
    labels, count = ndimage.label(grid.cells, structure=FOUR_CONNECTED)

    return labels, int(count)


def block_perimeters(labels: np.ndarray, count: int) -> np.ndarray:
    """
    Interior built/open edge counts per label, index 0 unused.
    """
    perimeters = np.zeros(count + 1, dtype=np.int64)

    for a, b in (
        (labels[:, :-1], labels[:, 1:]),  # horizontal neighbours
        (labels[:-1, :], labels[1:, :]),  # vertical neighbours
    ):
        left_built = a[(a > 0) & (b == 0)]
        right_built = b[(b > 0) & (a == 0)]

        perimeters += np.bincount(left_built, minlength=count + 1)
        perimeters += np.bincount(right_built, minlength=count + 1)

    return perimeters


def extract_blocks(grid: Grid) -> List[Block]:
    """
    Decomposes the built cells into blocks. Every built cell belongs to exactly one block and
    block ids follow raster scan order.
    """
    labels, count = label_blocks(grid)

    if count == 0:
        return []

    flat = labels.ravel()
    areas = np.bincount(flat, minlength=count + 1)
    perimeters = block_perimeters(labels, count)

    order = np.argsort(flat, kind="stable")
    # Skip the open cells, which sort first under label 0
    order = order[areas[0] :]
    rows, cols = np.divmod(order, grid.width)
    coordinates = np.stack([rows, cols], axis=1)

    splits = np.cumsum(areas[1:])[:-1]

    return [
        Block(
            id=idx,
            area=int(areas[idx]),
            perimeter=int(perimeters[idx]),
            cells=cells,
        )
        for idx, cells in enumerate(np.split(coordinates, splits), start=1)
    ]


def block_statistics(grid: Grid) -> BlockStatistics:
    """
    The totals permeability needs, without materializing per block cell lists.
    """
    labels, count = label_blocks(grid)

    if count == 0:
        return BlockStatistics(count=0, weighted_perimeter=0, built_area=0)

    areas = np.bincount(labels.ravel(), minlength=count + 1)
    perimeters = block_perimeters(labels, count)

    weighted = int(np.dot(perimeters[1:], areas[1:]))

    return BlockStatistics(count=count, weighted_perimeter=weighted, built_area=int(areas[1:].sum()))


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point]) -> List[Point]:
    """
    Andrew's monotone chain over integer points, counter-clockwise, collinear points dropped.
    """
    points = sorted(set(points))

    if len(points) <= 2:
        return list(points)

    lower: List[Point] = []
    for p in points:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: List[Point] = []
    for p in reversed(points):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return lower[:-1] + upper[:-1]


def shoelace_area(polygon: Sequence[Point]) -> float:
    twice_area = 0
    n = len(polygon)

    for i in range(n):
        x0, y0 = polygon[i]
        x1, y1 = polygon[(i + 1) % n]
        twice_area += x0 * y1 - x1 * y0

    return abs(twice_area) / 2


def hull_corner_points(grid: Grid) -> List[Point]:
    """
    Corner points (x, y) of the outermost built cell on each side of every row; the
    interior corners can never be hull vertices.
    """
    occupied_rows = np.flatnonzero(grid.cells.any(axis=1))

    points: List[Point] = []

    for r in occupied_rows.tolist():
        built = np.flatnonzero(grid.cells[r])
        first, last = int(built[0]), int(built[-1]) + 1

        points.extend([(first, r), (first, r + 1), (last, r), (last, r + 1)])

    return points


def convex_hull_area(grid: Grid) -> float:
    """
    Area of the convex hull of the corner points of all built cells, in cell units.

    Raises:
        EmptySettlementError: There are no built cells.
    """
    if grid.built_count == 0:
        raise EmptySettlementError()

    hull = convex_hull(hull_corner_points(grid))

    return shoelace_area(hull)
