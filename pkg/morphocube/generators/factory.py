import logging
from typing import Optional

from morphocube.schema.generation import GenSpec
from morphocube.schema.grid import Grid

from .anneal import anneal_entropy
from .dla import gen_dla
from .lattice import gen_dispersed, gen_ordered, gen_random
from .rrp import gen_rrp

logger = logging.getLogger(__name__)


def default_anneal_start(spec: GenSpec) -> Grid:
    """The random grid an anneal spec starts from when none is given: same size, seed and ``p``"""
    return gen_random(spec.model_copy(update={"kind": "random"}))


def generate(spec: GenSpec, start: Optional[Grid] = None, *, progress: bool = False) -> Grid:
    """
    Builds the configuration a spec describes.

    Args:
        spec: The generator parameters.
        start: Initial grid for ``anneal``; defaults to ``default_anneal_start(spec)``.
            Ignored by every other kind.
        progress: Show a progress bar where the generator supports one.
    """
    logger.debug("Generating %s", spec.describe())

    if spec.kind == "random":
        return gen_random(spec)
    elif spec.kind == "ordered":
        return gen_ordered(spec)
    elif spec.kind == "dispersed":
        return gen_dispersed(spec)
    elif spec.kind == "dla":
        return gen_dla(spec).grid
    elif spec.kind == "rrp":
        return gen_rrp(spec).grid
    elif spec.kind == "anneal":
        grid, _ = anneal_entropy(start if start is not None else default_anneal_start(spec), spec, progress=progress)
        return grid

    raise ValueError(f"Unknown generator kind: {spec.kind}")
