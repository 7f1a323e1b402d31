import logging
import math
from typing import Tuple

import numpy as np
from tqdm import tqdm

from morphocube.metrics.incremental import EntropyTracker
from morphocube.schema.generation import AnnealStep, AnnealTrace, GenSpec
from morphocube.schema.grid import Grid

from .base import GenerationError, numpy_rng, require_kind

logger = logging.getLogger(__name__)


class NoSwapPossibleError(GenerationError):
    def __init__(self, message: str = "no swap possible"):
        super().__init__(message)


def _accepts(spec: GenSpec, rng: np.random.Generator, delta: float, step: int) -> bool:
    if delta <= 0:
        return True

    if spec.mode == "greedy":
        return False

    temperature = spec.initial_temperature * spec.cooling**step
    if temperature <= 0:
        return False

    return bool(rng.random() < math.exp(-delta / temperature))


def anneal_entropy(start: Grid, spec: GenSpec, *, progress: bool = False) -> Tuple[Grid, AnnealTrace]:
    """
    Lowers the window entropy of ``start`` by swapping random built/open cell pairs.

    Density is preserved since every move trades one built cell for one open cell. In
    ``greedy`` mode a swap is kept iff it does not raise the entropy; in ``metropolis``
    mode uphill swaps are also kept with probability ``exp(-dH / T)`` where the
    temperature decays geometrically from ``initial_temperature`` by ``cooling`` per step.

    Args:
        start: The initial configuration, usually a random grid.
        spec: An ``anneal`` spec matching the start grid's dimensions.
        progress: Show a progress bar.

    Returns:
        The final grid and the entropy after every proposed swap.

    Raises:
        NoSwapPossibleError: The start grid is all built or all open.
        GenerationError: The spec is not an anneal spec or its dimensions differ from the grid.
    """
    require_kind(spec, "anneal")

    if (spec.width, spec.height) != (start.width, start.height):
        raise GenerationError(
            f"Spec is {spec.width}x{spec.height} but the start grid is {start.width}x{start.height}"
        )

    if start.is_homogeneous:
        raise NoSwapPossibleError()

    if spec.steps == 0:
        return start, AnnealTrace()

    rng = numpy_rng(spec)
    tracker = EntropyTracker(start)

    flat = start.cells.ravel()
    built = np.flatnonzero(flat == 1)
    open_ = np.flatnonzero(flat == 0)

    width = start.width
    initial = tracker.entropy
    steps = []

    for step in tqdm(range(spec.steps), desc="Annealing", disable=not progress, leave=False):
        i = int(rng.integers(len(built)))
        j = int(rng.integers(len(open_)))

        built_cell = divmod(int(built[i]), width)
        open_cell = divmod(int(open_[j]), width)

        delta = tracker.delta_entropy(built_cell, open_cell)
        accepted = _accepts(spec, rng, delta, step)

        if accepted:
            tracker.apply_swap(built_cell, open_cell)
            built[i], open_[j] = open_[j], built[i]

        steps.append(AnnealStep(step=step, H=tracker.entropy, accepted=accepted))

    trace = AnnealTrace(steps=steps)
    logger.info(
        "Annealed %d steps (%d accepted), H %.6f -> %.6f",
        spec.steps,
        len(trace.accepted()),
        initial,
        tracker.entropy,
    )

    return tracker.to_grid(), trace
