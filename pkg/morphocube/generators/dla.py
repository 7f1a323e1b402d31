"""
On-lattice diffusion-limited aggregation.

A seed cell sits at the grid center. Each particle is launched from a random point on a
circle of radius ``cluster radius + 5`` and walks between 4-neighbours until it is
4-adjacent to the cluster, where it sticks. Walkers farther than twice the launch radius,
or leaving the grid, are relaunched. Growth halts early once the launch circle no longer
fits inside the grid.

The walk runs in a numba kernel driven by xorshift64*.
"""

import logging
import math

import numpy as np
from numba import njit

from morphocube.schema.generation import GenSpec, GrowthResult
from morphocube.schema.grid import Grid

from .base import GenerationError, center_cell, require_kind, xorshift_state

logger = logging.getLogger(__name__)

LAUNCH_MARGIN = 5.0
KILL_FACTOR = 2.0

_XS_MULT = np.uint64(0x2545F4914F6CDD1D)
_S12 = np.uint64(12)
_S25 = np.uint64(25)
_S27 = np.uint64(27)
_S11 = np.uint64(11)
_S62 = np.uint64(62)
_INV_2_53 = 1.0 / 9007199254740992.0

_DY = np.array([-1, 0, 1, 0], dtype=np.int64)
_DX = np.array([0, 1, 0, -1], dtype=np.int64)


@njit(cache=True)
def _next_u64(state):
    x = state[0]
    x ^= x >> _S12
    x ^= x << _S25
    x ^= x >> _S27
    state[0] = x
    return x * _XS_MULT


@njit(cache=True)
def _next_unit(state):
    return float(_next_u64(state) >> _S11) * _INV_2_53


@njit(cache=True)
def _touches_cluster(occupied, y, x):
    height, width = occupied.shape
    for d in range(4):
        ny = y + _DY[d]
        nx = x + _DX[d]
        if 0 <= ny < height and 0 <= nx < width and occupied[ny, nx] == 1:
            return True
    return False


@njit(cache=True)
def _aggregate(occupied, particles, state, launch_margin, kill_factor):
    height, width = occupied.shape
    cy = height // 2
    cx = width // 2

    occupied[cy, cx] = 1
    placed = 1
    radius = 0.0

    # Distance from the center to the nearest grid edge cell
    edge = min(cy, cx, height - 1 - cy, width - 1 - cx)

    while placed < particles:
        launch = radius + launch_margin
        if launch >= edge:
            return placed, True

        kill_sq = (kill_factor * launch) ** 2

        theta = 2.0 * math.pi * _next_unit(state)
        y = cy + int(round(launch * math.sin(theta)))
        x = cx + int(round(launch * math.cos(theta)))

        while True:
            if _touches_cluster(occupied, y, x):
                occupied[y, x] = 1
                placed += 1
                dist = math.sqrt(float((y - cy) ** 2 + (x - cx) ** 2))
                if dist > radius:
                    radius = dist
                break

            d = int(_next_u64(state) >> _S62)
            y += _DY[d]
            x += _DX[d]

            escaped = y < 0 or y >= height or x < 0 or x >= width
            if escaped or float((y - cy) ** 2 + (x - cx) ** 2) > kill_sq:
                theta = 2.0 * math.pi * _next_unit(state)
                y = cy + int(round(launch * math.sin(theta)))
                x = cx + int(round(launch * math.cos(theta)))

    return placed, False


def gen_dla(spec: GenSpec) -> GrowthResult:
    """
    Grows a DLA cluster of ``spec.particles`` cells, the seed included.

    Raises:
        GenerationError: The particle budget is zero or exceeds the grid.
    """
    require_kind(spec, "dla")

    if spec.particles < 1:
        raise GenerationError("DLA needs at least one particle")

    if spec.particles > spec.total_cells:
        raise GenerationError(f"{spec.particles} particles can't fit in {spec.total_cells} cells")

    occupied = np.zeros((spec.height, spec.width), dtype=np.uint8)
    state = xorshift_state(spec)

    placed, halted = _aggregate(occupied, spec.particles, state, LAUNCH_MARGIN, KILL_FACTOR)

    if halted:
        logger.warning(
            "DLA cluster reached the grid edge after %d of %d particles",
            placed,
            spec.particles,
        )

    logger.info("DLA placed %d particles around %s", placed, center_cell(spec.width, spec.height))

    return GrowthResult(
        grid=Grid(cells=occupied),
        placed=int(placed),
        halted="launch-circle" if halted else None,
    )
