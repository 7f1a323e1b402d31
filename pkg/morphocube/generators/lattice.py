"""
Closed-form reference configurations: random, perfectly ordered and dispersed.
"""

import logging

import numpy as np

from morphocube.schema.generation import GenSpec
from morphocube.schema.grid import Grid

from .base import GenerationError, numpy_rng, require_kind

logger = logging.getLogger(__name__)


def gen_random(spec: GenSpec) -> Grid:
    """
    Each cell is built independently with probability ``spec.p``.
    """
    require_kind(spec, "random")

    rng = numpy_rng(spec)
    cells = rng.random((spec.height, spec.width)) < spec.p

    return Grid(cells=cells)


def gen_ordered(spec: GenSpec) -> Grid:
    """
    A periodic tiling of solid ``block_size`` squares separated by ``street_width`` streets.

    When blocks and streets are equally wide the tiling staggers into a checkerboard of
    ``block_size`` squares, so ``block_size = street_width = 1`` yields the cell
    checkerboard. Either way the pattern repeats every ``block_size + street_width`` cells.
    """
    require_kind(spec, "ordered")

    block, street = spec.block_size, spec.street_width
    period = block + street

    if period > min(spec.width, spec.height):
        raise GenerationError(
            f"block_size + street_width ({period}) exceeds the grid's smaller side ({min(spec.width, spec.height)})"
        )

    rows = np.arange(spec.height)[:, None]
    cols = np.arange(spec.width)[None, :]

    if block == street:
        cells = (rows // block + cols // block) % 2 == 0
    else:
        cells = (rows % period < block) & (cols % period < block)

    return Grid(cells=cells)


def gen_dispersed(spec: GenSpec) -> Grid:
    """
    Single built cells on a square lattice; no two ever touch, so every block has area 1.
    """
    require_kind(spec, "dispersed")

    if spec.spacing < 2:
        raise GenerationError("spacing must be at least 2 or cells would merge into blocks")

    cells = np.zeros((spec.height, spec.width), dtype=np.uint8)
    cells[:: spec.spacing, :: spec.spacing] = 1

    return Grid(cells=cells)
