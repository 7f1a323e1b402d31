"""
Morphospace trajectories of growth processes.

Every growth process consumes its random stream one unit of budget at a time, so the
configuration after ``k`` units equals a fresh run of the same spec with budget ``k``.
Checkpoints are therefore independent and can be generated concurrently.
"""

import logging
from typing import Dict, Optional, Sequence

from morphocube.metrics.measure import DensityMode, measure
from morphocube.schema.generation import GeneratorKind, GenSpec
from morphocube.schema.grid import Grid
from morphocube.schema.layout import MorphoDataset, MorphoPoint
from morphocube.utils.util import ordered_map

from .base import GenerationError
from .factory import default_anneal_start, generate

logger = logging.getLogger(__name__)

BUDGET_FIELDS: Dict[GeneratorKind, str] = {
    "dla": "particles",
    "rrp": "cells_to_place",
    "anneal": "steps",
}


def checkpoint_spec(spec: GenSpec, budget: int) -> GenSpec:
    if spec.kind not in BUDGET_FIELDS:
        raise GenerationError(f"'{spec.kind}' is not a growth process and has no trajectory")

    return spec.model_copy(update={BUDGET_FIELDS[spec.kind]: budget})


def trajectory(
    spec: GenSpec,
    checkpoints: Sequence[int],
    density_mode: DensityMode = "global",
    *,
    start: Optional[Grid] = None,
    workers: int = 1,
) -> MorphoDataset:
    """
    Measures a growth process at each checkpoint budget.

    Args:
        spec: A ``dla``, ``rrp`` or ``anneal`` spec; its own budget is ignored.
        checkpoints: Strictly increasing budgets (particles, cells or steps).
        density_mode: Passed through to ``measure``.
        start: Initial grid for ``anneal``.
        workers: Checkpoints generated and measured concurrently.

    Returns:
        One point per checkpoint, labelled ``kind@budget``, in checkpoint order.
    """
    if not checkpoints:
        raise GenerationError("A trajectory needs at least one checkpoint")

    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise GenerationError("Checkpoints must be strictly increasing")

    specs = [checkpoint_spec(spec, budget) for budget in checkpoints]

    if spec.kind == "anneal" and start is None:
        start = default_anneal_start(spec)

    def _measure_checkpoint(checkpoint: GenSpec) -> MorphoPoint:
        budget = getattr(checkpoint, BUDGET_FIELDS[spec.kind])
        grid = generate(checkpoint, start)

        return measure(grid, density_mode, label=f"{spec.kind}@{budget}", category="theoretical")

    points = ordered_map(_measure_checkpoint, specs, workers=workers)
    logger.info("Measured %d checkpoints of %s", len(points), spec.describe())

    return MorphoDataset(points=points, provenance=[checkpoint.describe() for checkpoint in specs])
