import logging
from typing import Dict, Sequence

import numpy as np

from morphocube.blocks import EmptySettlementError
from morphocube.schema.grid import Grid

logger = logging.getLogger(__name__)

DEFAULT_BOX_SIZES = (2, 4, 8, 16, 32, 64)


def box_counts(grid: Grid, sizes: Sequence[int] = DEFAULT_BOX_SIZES) -> Dict[int, int]:
    """
    Number of ``s x s`` boxes, tiled from the top-left corner, that hold at least one built
    cell. Boxes overhanging the right or bottom edge are counted like full boxes.
    """
    counts = {}

    for size in sizes:
        if size < 1:
            raise ValueError("Box sizes must be positive")

        pad_h = -grid.height % size
        pad_w = -grid.width % size
        cells = np.pad(grid.cells, ((0, pad_h), (0, pad_w)))

        boxes = cells.reshape(cells.shape[0] // size, size, cells.shape[1] // size, size)
        counts[size] = int(boxes.any(axis=(1, 3)).sum())

    return counts


def box_counting_dimension(grid: Grid, sizes: Sequence[int] = DEFAULT_BOX_SIZES) -> float:
    """
    Least squares slope of log N(s) against log(1/s).

    Raises:
        EmptySettlementError: There are no built cells.
    """
    if grid.built_count == 0:
        raise EmptySettlementError()

    if len(sizes) < 2:
        raise ValueError("At least two box sizes are needed for a slope")

    counts = box_counts(grid, sizes)

    x = np.log(1.0 / np.asarray(sizes, dtype=np.float64))
    y = np.log(np.asarray([counts[s] for s in sizes], dtype=np.float64))

    slope, _ = np.polyfit(x, y, 1)

    logger.debug("Box counts %s give dimension %.4f", counts, slope)

    return float(slope)
