import logging
import math
from typing import Dict, List, Tuple

import numpy as np

from morphocube.schema.grid import Grid
from morphocube.schema.layout import PATTERN_CODES

from .information import ALL_BUILT, ALL_OPEN, WINDOW, cell_bit, check_window_fits, counts_entropy, window_codes

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


def _plogp(count: int) -> float:
    return count * math.log2(count) if count > 0 else 0.0


class EntropyTracker:
    """
    Keeps the window histogram of a mutable grid so that the entropy change of swapping a
    built cell with an open cell is computed from the at most 32 windows covering them.

    Entropy is tracked as ``H = log2(T) - S / T`` where ``T`` is the number of counted
    (non-homogeneous) windows and ``S`` the sum of ``c * log2(c)`` over their counts.
    """

    def __init__(self, grid: Grid) -> None:
        check_window_fits(grid)

        self.cells = np.array(grid.cells, dtype=np.uint8, copy=True)
        self.codes = window_codes(self.cells).astype(np.int64)
        self.counts = np.bincount(self.codes.ravel(), minlength=PATTERN_CODES).astype(np.int64)

        self._resync()

    @property
    def height(self) -> int:
        return int(self.cells.shape[0])

    @property
    def width(self) -> int:
        return int(self.cells.shape[1])

    def _resync(self) -> None:
        admissible = self.counts.copy()
        admissible[ALL_OPEN] = 0
        admissible[ALL_BUILT] = 0

        self.total = int(admissible.sum())
        self.plogp_sum = math.fsum(_plogp(int(c)) for c in admissible[admissible > 0])

    @staticmethod
    def _entropy(total: int, plogp_sum: float) -> float:
        if total <= 0:
            return 0.0

        return max(0.0, math.log2(total) - plogp_sum / total)

    @property
    def entropy(self) -> float:
        return self._entropy(self.total, self.plogp_sum)

    def exact_entropy(self) -> float:
        """Entropy recomputed from the full histogram"""
        admissible = self.counts.copy()
        admissible[ALL_OPEN] = 0
        admissible[ALL_BUILT] = 0

        return counts_entropy(admissible)

    def to_grid(self) -> Grid:
        return Grid(cells=self.cells)

    def _covering_windows(self, cell: Cell) -> List[Cell]:
        r, c = cell
        rows = range(max(0, r - WINDOW + 1), min(r, self.height - WINDOW) + 1)
        cols = range(max(0, c - WINDOW + 1), min(c, self.width - WINDOW) + 1)

        return [(i, j) for i in rows for j in cols]

    def _swap_changes(self, built: Cell, open_: Cell) -> List[Tuple[int, int, int, int]]:
        """(row, col, old code, new code) for every window the swap touches"""
        masks: Dict[Cell, int] = {}

        for cell in (built, open_):
            for i, j in self._covering_windows(cell):
                masks[(i, j)] = masks.get((i, j), 0) ^ cell_bit(cell[0] - i, cell[1] - j)

        changes = []
        for (i, j), mask in masks.items():
            old = int(self.codes[i, j])
            changes.append((i, j, old, old ^ mask))

        return changes

    def _validate_swap(self, built: Cell, open_: Cell) -> None:
        if self.cells[built] != 1 or self.cells[open_] != 0:
            raise ValueError("A swap needs one built and one open cell")

    def _count_deltas(self, changes) -> Dict[int, int]:
        deltas: Dict[int, int] = {}

        for _, _, old, new in changes:
            if old == new:
                continue
            deltas[old] = deltas.get(old, 0) - 1
            deltas[new] = deltas.get(new, 0) + 1

        return deltas

    def _updated_totals(self, deltas: Dict[int, int]) -> Tuple[int, float]:
        total = self.total
        plogp_sum = self.plogp_sum

        for code, delta in deltas.items():
            if delta == 0 or code in (ALL_OPEN, ALL_BUILT):
                continue

            count = int(self.counts[code])
            total += delta
            plogp_sum += _plogp(count + delta) - _plogp(count)

        return total, plogp_sum

    def delta_entropy(self, built: Cell, open_: Cell) -> float:
        """
        The entropy change, in bits, of turning ``built`` open and ``open_`` built. The
        tracker is left untouched.
        """
        self._validate_swap(built, open_)

        deltas = self._count_deltas(self._swap_changes(built, open_))
        total, plogp_sum = self._updated_totals(deltas)

        return self._entropy(total, plogp_sum) - self.entropy

    def apply_swap(self, built: Cell, open_: Cell) -> float:
        """
        Performs the swap and returns the entropy change in bits.
        """
        self._validate_swap(built, open_)

        changes = self._swap_changes(built, open_)
        deltas = self._count_deltas(changes)

        before = self.entropy
        self.total, self.plogp_sum = self._updated_totals(deltas)

        for code, delta in deltas.items():
            self.counts[code] += delta

        for i, j, _, new in changes:
            self.codes[i, j] = new

        self.cells[built] = 0
        self.cells[open_] = 1

        return self.entropy - before
