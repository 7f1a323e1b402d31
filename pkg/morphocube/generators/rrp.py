"""
Restricted random placement: an aggregate grows one cell at a time from a central seed,
choosing uniformly among open cells 4-adjacent to it, but only where the placement keeps
all open space a single 4-connected region.
"""

import logging
from typing import List, Set, Tuple

import numpy as np
from scipy import ndimage

from morphocube.schema.generation import GenSpec, GrowthResult
from morphocube.schema.grid import Grid

from ..blocks import FOUR_CONNECTED
from .base import GenerationError, center_cell, numpy_rng, require_kind

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]

# Clockwise ring around a cell, starting north; even positions are the 4-neighbours
_RING = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1))


def _is_open(cells: np.ndarray, r: int, c: int) -> bool:
    height, width = cells.shape
    return 0 <= r < height and 0 <= c < width and cells[r, c] == 0


def _open_neighbours(cells: np.ndarray, cell: Cell) -> List[Cell]:
    r, c = cell
    return [(r + dr, c + dc) for dr, dc in _RING[::2] if _is_open(cells, r + dr, c + dc)]


def _locally_connected(cells: np.ndarray, cell: Cell) -> bool:
    """
    True when the open 4-neighbours of ``cell`` stay linked through its open ring cells,
    which is sufficient for building on it to leave open space connected.
    """
    r, c = cell
    ring = [_is_open(cells, r + dr, c + dc) for dr, dc in _RING]

    if all(ring):
        return True

    # Walk the ring from a closed position and count runs holding a 4-neighbour
    start = ring.index(False)
    runs = 0
    in_run = False
    run_has_neighbour = False

    for offset in range(1, len(_RING) + 1):
        position = (start + offset) % len(_RING)

        if ring[position]:
            in_run = True
            run_has_neighbour = run_has_neighbour or position % 2 == 0
        elif in_run:
            runs += run_has_neighbour
            in_run = False
            run_has_neighbour = False

    return runs <= 1


def _globally_connected(cells: np.ndarray, cell: Cell) -> bool:
    trial = cells == 0
    trial[cell] = False

    _, count = ndimage.label(trial, structure=FOUR_CONNECTED)

    return count == 1


def placement_keeps_open_connected(cells: np.ndarray, cell: Cell) -> bool:
    """
    Whether building ``cell`` leaves the open cells as exactly one 4-connected component,
    given that they form one before.
    """
    neighbours = _open_neighbours(cells, cell)

    if not neighbours:
        # ``cell`` would be the last open cell
        return False

    if len(neighbours) == 1 or _locally_connected(cells, cell):
        return True

    return _globally_connected(cells, cell)


def gen_rrp(spec: GenSpec) -> GrowthResult:
    """
    Grows an aggregate of ``spec.cells_to_place`` built cells, the seed included.

    Every round draws uniformly from the frontier in row-major order, redrawing among the
    remaining candidates when one would enclose open space. A candidate rejected in one
    round is reconsidered in later rounds, once the aggregate has changed around it.

    Raises:
        GenerationError: The budget is zero or would leave no open cell.
    """
    require_kind(spec, "rrp")

    budget = spec.cells_to_place
    if budget < 1:
        raise GenerationError("RRP needs at least the seed cell")

    if budget > spec.total_cells - 1:
        raise GenerationError(f"Placing {budget} cells would leave no open space in {spec.total_cells} cells")

    rng = numpy_rng(spec)
    cells = np.zeros((spec.height, spec.width), dtype=np.uint8)

    seed = center_cell(spec.width, spec.height)
    cells[seed] = 1
    placed = 1
    frontier: Set[Cell] = set(_open_neighbours(cells, seed))

    halted = None
    while placed < budget:
        candidates = sorted(frontier)
        chosen = None

        while candidates:
            candidate = candidates.pop(int(rng.integers(len(candidates))))

            if placement_keeps_open_connected(cells, candidate):
                chosen = candidate
                break

        if chosen is None:
            halted = "exhausted"
            logger.warning("RRP frontier exhausted after %d of %d cells", placed, budget)
            break

        cells[chosen] = 1
        placed += 1
        frontier.discard(chosen)
        frontier.update(_open_neighbours(cells, chosen))

    return GrowthResult(grid=Grid(cells=cells), placed=placed, halted=halted)
