"""
Spatial information from 4x4 window pattern frequencies.

Every window fully inside the grid is visited with unit stride. Its 16 cells are
packed row-major into a 16 bit code, top-left cell in the most significant bit.
All-open (0) and all-built (65535) windows are skipped, so the admissible pattern
space has 65,534 codes and the entropy of an equiprobable draw over it is the
normalizing maximum.
"""

import logging
import math

import numpy as np

from morphocube.schema.grid import Grid
from morphocube.schema.layout import PATTERN_CODES, WindowHistogram
from morphocube.utils.util import chunk_range, ordered_map

logger = logging.getLogger(__name__)

WINDOW = 4
PATTERN_SPACE = PATTERN_CODES - 2
H_MAX = math.log2(PATTERN_SPACE)

ALL_OPEN = 0
ALL_BUILT = PATTERN_CODES - 1


class GridTooSmallError(ValueError):
    def __init__(self, message: str = "grid too small for n=16 windows") -> None:
        super().__init__(message)


def check_window_fits(grid: Grid) -> None:
    if grid.width < WINDOW or grid.height < WINDOW:
        raise GridTooSmallError()


def window_codes(cells: np.ndarray) -> np.ndarray:
    """
    Packed codes of every 4x4 window of ``cells``, shape ``(h - 3, w - 3)``.
    """
    height, width = cells.shape
    out_h, out_w = height - WINDOW + 1, width - WINDOW + 1

    # Pack each horizontal run of four cells into a nibble first
    nibbles = np.zeros((height, out_w), dtype=np.uint16)
    for c in range(WINDOW):
        nibbles |= cells[:, c : c + out_w].astype(np.uint16) << (WINDOW - 1 - c)

    codes = np.zeros((out_h, out_w), dtype=np.uint16)
    for r in range(WINDOW):
        codes |= nibbles[r : r + out_h] << (WINDOW * (WINDOW - 1 - r))

    return codes


def cell_bit(row_offset: int, col_offset: int) -> int:
    """The bit a cell at the given offset inside a window occupies in its code"""
    return 1 << (WINDOW * WINDOW - 1 - (WINDOW * row_offset + col_offset))


def _count_rows(cells: np.ndarray, start: int, stop: int) -> np.ndarray:
    codes = window_codes(cells[start : stop + WINDOW - 1])
    return np.bincount(codes.ravel(), minlength=PATTERN_CODES).astype(np.int64)


def window_histogram(grid: Grid, *, workers: int = 1) -> WindowHistogram:
    """
    Counts non-homogeneous 4x4 patterns over all window positions.

    Window rows are split evenly across ``workers`` threads; each counts into a private
    histogram and the partial histograms are summed in row order, so the result does not
    depend on the worker count.

    Raises:
        GridTooSmallError: The grid is narrower or shorter than 4 cells.
    """
    check_window_fits(grid)

    out_h = grid.height - WINDOW + 1
    out_w = grid.width - WINDOW + 1

    spans = chunk_range(out_h, workers)
    partials = ordered_map(lambda span: _count_rows(grid.cells, *span), spans, workers=workers)

    counts = np.zeros(PATTERN_CODES, dtype=np.int64)
    for partial in partials:
        counts += partial

    counts[ALL_OPEN] = 0
    counts[ALL_BUILT] = 0

    return WindowHistogram(counts=counts, windows=out_h * out_w)


def histogram_entropy(histogram: WindowHistogram) -> float:
    """
    Shannon entropy in bits over the observed patterns. Terms are summed largest count
    first with exactly rounded summation; an empty histogram has zero entropy.
    """
    return counts_entropy(histogram.counts)


def counts_entropy(counts: np.ndarray) -> float:
    observed = counts[counts > 0]

    if observed.size == 0:
        return 0.0

    observed = np.sort(observed)[::-1]
    total = int(observed.sum())

    probabilities = observed / total
    terms = -probabilities * np.log2(probabilities)

    return math.fsum(terms.tolist())


def entropy(grid: Grid, *, workers: int = 1) -> float:
    """H, the entropy of the grid's window patterns in bits"""
    return histogram_entropy(window_histogram(grid, workers=workers))


def normalized_information(H: float) -> float:
    return min(1.0, max(0.0, 1.0 - H / H_MAX))


def information(grid: Grid, *, workers: int = 1) -> float:
    """
    I = 1 - H / log2(65534). Homogeneous grids carry no surprise and score 1.

    Raises:
        GridTooSmallError: The grid is narrower or shorter than 4 cells.
    """
    return normalized_information(entropy(grid, workers=workers))


def distinct_patterns(grid: Grid, *, workers: int = 1) -> int:
    """
    The number of distinct non-homogeneous patterns found, out of 65,534 possible.

    Raises:
        GridTooSmallError: The grid is narrower or shorter than 4 cells.
    """
    return window_histogram(grid, workers=workers).distinct
