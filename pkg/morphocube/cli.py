"""
Command line entry point.

    morphocube measure city.pgm --mode hull
    morphocube generate --kind dla --particles 20000 --size 1000 --out dla.pgm --measure
    morphocube plot dataset.csv --out plots/
    morphocube classify dataset.csv --bands bands.json
    morphocube cluster dataset.csv --k 3
    morphocube trajectory --kind rrp --size 100 --checkpoints 100,200,400

Exit codes: 0 on success, 1 when some input or step failed, 2 on invalid arguments.
"""

import argparse
import csv
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import ValidationError
from tqdm import tqdm

from morphocube.generators import anneal_entropy, default_anneal_start, generate, trajectory
from morphocube.metrics import measure
from morphocube.raster import ANALYSIS_SIZE, load_raster, resample, save_raster
from morphocube.schema import DEFAULT_SEED, GenSpec, Grid, MorphoDataset, MorphoPoint, RunConfig
from morphocube.space import (
    DEFAULT_BANDS,
    UNOCCUPIED,
    classify,
    cluster,
    dataset_to_csv,
    emit_csv,
    emit_pairwise_svgs,
    load_bands,
    load_csv,
    nearest_band,
)
from morphocube.utils.util import name_from_path, ordered_map, path_exists, write_bytes_to_path

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_size(value: str) -> Tuple[int, int]:
    """Parses ``WxH`` or a single side length"""
    try:
        if "x" in value.lower():
            width, height = value.lower().split("x", 1)
            return int(width), int(height)

        return int(value), int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected WxH or N, got '{value}'") from None


def parse_checkpoints(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma separated integers, got '{value}'") from None


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for detail")
    common.add_argument("--quiet", action="store_true", help="Hide progress bars")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"64 bit seed (default: {DEFAULT_SEED})")
    common.add_argument("--workers", type=int, default=1, help="Worker threads (default: 1)")
    common.add_argument("--out", default=None, help="Output file or directory")

    return common


def _add_generator_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--kind", required=True, choices=["ordered", "random", "dispersed", "dla", "rrp", "anneal"]
    )
    parser.add_argument("--size", type=parse_size, default=(100, 100), help="Grid size, WxH or N (default: 100)")
    parser.add_argument("--p", type=float, default=0.5, help="Occupancy probability for random grids")
    parser.add_argument("--block", type=int, default=8, help="Block side for ordered grids")
    parser.add_argument("--street", type=int, default=2, help="Street width for ordered grids")
    parser.add_argument("--spacing", type=int, default=10, help="Lattice spacing for dispersed grids")
    parser.add_argument("--particles", type=int, default=1000, help="DLA particles, seed included")
    parser.add_argument("--cells", type=int, default=500, help="RRP cells to place, seed included")
    parser.add_argument("--steps", type=int, default=1000, help="Annealing steps")
    parser.add_argument("--anneal-mode", choices=["greedy", "metropolis"], default="greedy")
    parser.add_argument("--temperature", type=float, default=1.0, help="Initial Metropolis temperature")
    parser.add_argument("--cooling", type=float, default=0.999, help="Geometric cooling factor per step")
    parser.add_argument("--start", default=None, help="Start raster for annealing; a random grid otherwise")
    parser.add_argument("--threshold", type=int, default=128, help="Gray level below which pixels are built")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()

    parser = argparse.ArgumentParser(prog="morphocube", description="Settlement footprints in morphospace")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("measure", parents=[common], help="Measure footprint rasters")
    p.add_argument("inputs", nargs="+", help="PGM (P2/P5) or plain text grids")
    p.add_argument("--mode", choices=["global", "hull"], default="global", help="Density denominator")
    p.add_argument("--threshold", type=int, default=128, help="Gray level below which pixels are built")
    p.add_argument("--invert", action="store_true", help="Light pixels are built form")
    p.add_argument("--resample", type=parse_size, default=None, help="Resample to WxH before measuring")
    p.add_argument(
        "--analysis-size", action="store_true", help=f"Resample to {ANALYSIS_SIZE}x{ANALYSIS_SIZE} before measuring"
    )
    p.add_argument("--dataset", default=None, help="Append the points to this dataset CSV")

    p = commands.add_parser("generate", parents=[common], help="Generate a theoretical configuration")
    _add_generator_arguments(p)
    p.add_argument("--format", choices=["pgm", "pgm-p2", "text"], default=None, help="Output format")
    p.add_argument(
        "--measure", action="store_true", help="Also measure the grid; the row goes to --dataset or standard output"
    )
    p.add_argument("--mode", choices=["global", "hull"], default="global", help="Density denominator")
    p.add_argument("--dataset", default=None, help="Append the measured point to this dataset CSV")
    p.add_argument("--trace", default=None, help="Write the annealing trace CSV here")

    p = commands.add_parser("plot", parents=[common], help="Pairwise SVG scatter plots of a dataset")
    p.add_argument("inputs", nargs=1, metavar="DATASET")

    p = commands.add_parser("classify", parents=[common], help="Classify dataset points into bands")
    p.add_argument("inputs", nargs=1, metavar="DATASET")
    p.add_argument("--bands", default=None, help="JSON band table")

    p = commands.add_parser("cluster", parents=[common], help="k-means clusters of a dataset")
    p.add_argument("inputs", nargs=1, metavar="DATASET")
    p.add_argument("--k", type=int, required=True, help="Number of clusters")

    p = commands.add_parser("trajectory", parents=[common], help="Measure a growth process at checkpoints")
    _add_generator_arguments(p)
    p.add_argument("--checkpoints", type=parse_checkpoints, required=True, help="Budgets, e.g. 100,200,400")
    p.add_argument("--mode", choices=["global", "hull"], default="global", help="Density denominator")

    return parser


def spec_from_args(args: argparse.Namespace) -> GenSpec:
    width, height = args.size

    return GenSpec(
        kind=args.kind,
        width=width,
        height=height,
        seed=args.seed,
        p=args.p,
        block_size=args.block,
        street_width=args.street,
        spacing=args.spacing,
        particles=args.particles,
        cells_to_place=args.cells,
        steps=args.steps,
        mode=args.anneal_mode,
        initial_temperature=args.temperature,
        cooling=args.cooling,
    )


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        pydantic.ValidationError: A flag is out of range or the combination is invalid.
    """
    resample = getattr(args, "resample", None)
    if getattr(args, "analysis_size", False):
        resample = (ANALYSIS_SIZE, ANALYSIS_SIZE)

    return RunConfig(
        command=args.command,
        inputs=list(getattr(args, "inputs", [])),
        out=args.out,
        dataset=getattr(args, "dataset", None),
        density_mode=getattr(args, "mode", "global"),
        threshold=getattr(args, "threshold", 128),
        invert=getattr(args, "invert", False),
        resample=resample,
        bands=getattr(args, "bands", None),
        seed=args.seed,
        workers=args.workers,
        spec=spec_from_args(args) if hasattr(args, "kind") else None,
        start=getattr(args, "start", None),
        format=getattr(args, "format", None),
        measure=getattr(args, "measure", False),
        trace=getattr(args, "trace", None),
        k=getattr(args, "k", None),
        checkpoints=getattr(args, "checkpoints", []),
        verbosity=args.verbose,
        quiet=args.quiet,
    )


def configure_logging(config: RunConfig) -> None:
    level = logging.WARNING
    if config.verbosity == 1:
        level = logging.INFO
    elif config.verbosity >= 2:
        level = logging.DEBUG

    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def show_progress(config: RunConfig) -> bool:
    return not config.quiet and sys.stderr.isatty()


def report(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _add_points(dataset: MorphoDataset, points: Sequence[Tuple[MorphoPoint, str]]) -> int:
    """Adds points in order, reporting and skipping any whose label is taken; returns how many were skipped"""
    skipped = 0

    for point, source in points:
        try:
            dataset.add(point, source)
        except ValueError as e:
            report(f"{source or point.label}: {e}")
            skipped += 1

    return skipped


def _emit_points(config: RunConfig, points: Sequence[Tuple[MorphoPoint, str]], out: Optional[str] = None) -> int:
    """
    Appends to ``--dataset`` when given, otherwise writes CSV to ``out`` or standard output.

    Returns:
        The number of points left out because their label was already taken.
    """
    if config.dataset:
        dataset = load_csv(config.dataset) if path_exists(config.dataset) else MorphoDataset()
        skipped = _add_points(dataset, points)
        emit_csv(dataset, config.dataset)
        return skipped

    dataset = MorphoDataset()
    skipped = _add_points(dataset, points)

    if out:
        emit_csv(dataset, out)
    else:
        sys.stdout.write(dataset_to_csv(dataset))

    return skipped


def _load_dataset(config: RunConfig) -> MorphoDataset:
    return load_csv(config.inputs[0])


MeasureOutcome = Union[Tuple[MorphoPoint, str], Exception]


def cmd_measure(config: RunConfig) -> int:
    inner_workers = config.workers if len(config.inputs) == 1 else 1
    progress = tqdm(total=len(config.inputs), desc="Measuring", disable=not show_progress(config), file=sys.stderr)

    def _measure_one(path: str) -> MeasureOutcome:
        try:
            grid = load_raster(path, config.threshold, invert=config.invert)

            if config.resample is not None:
                grid = resample(grid, *config.resample)

            point = measure(grid, config.density_mode, label=Path(name_from_path(path)).stem, workers=inner_workers)
            return point, path
        except (OSError, ValueError) as e:
            return e
        finally:
            progress.update(1)

    with progress:
        outcomes = ordered_map(_measure_one, config.inputs, workers=config.workers)

    points = []
    for path, outcome in zip(config.inputs, outcomes):
        if isinstance(outcome, Exception):
            report(f"{path}: {outcome}")
        else:
            points.append(outcome)

    try:
        skipped = _emit_points(config, points, config.out)
    except (ValueError, OSError) as e:
        report(str(e))
        return EXIT_FAILED

    return EXIT_OK if len(points) - skipped == len(config.inputs) else EXIT_FAILED


def _anneal_start(config: RunConfig, spec: GenSpec) -> Tuple[GenSpec, Optional[Grid]]:
    """Loads ``--start`` if given; the spec then takes its dimensions from the raster"""
    if spec.kind != "anneal" or not config.start:
        return spec, None

    start = load_raster(config.start, config.threshold)

    return spec.model_copy(update={"width": start.width, "height": start.height}), start


def cmd_generate(config: RunConfig) -> int:
    spec = config.spec
    if config.out is None:
        report("'generate' needs --out")
        return EXIT_USAGE

    try:
        spec, start = _anneal_start(config, spec)

        if spec.kind == "anneal":
            start = start if start is not None else default_anneal_start(spec)
            grid, trace = anneal_entropy(start, spec, progress=show_progress(config))
            if config.trace:
                write_bytes_to_path(config.trace, trace.to_csv().encode("utf-8"))
        else:
            grid = generate(spec, progress=show_progress(config))

        save_raster(grid, config.out, config.format)
        logger.info("Wrote %s to %s", spec.describe(), config.out)

        if config.measure:
            label = Path(name_from_path(config.out)).stem
            point = measure(grid, config.density_mode, label=label, category="theoretical", workers=config.workers)
            # --out holds the raster here, so the row goes to --dataset or stdout
            if _emit_points(config, [(point, spec.describe())]):
                return EXIT_FAILED
    except (ValueError, OSError) as e:
        report(str(e))
        return EXIT_FAILED

    return EXIT_OK


def cmd_plot(config: RunConfig) -> int:
    if config.out is None:
        report("'plot' needs --out DIRECTORY")
        return EXIT_USAGE

    try:
        dataset = _load_dataset(config)
        emit_pairwise_svgs(dataset, config.out)
    except (ValueError, OSError) as e:
        report(str(e))
        return EXIT_FAILED

    return EXIT_OK


def cmd_classify(config: RunConfig) -> int:
    try:
        bands = load_bands(config.bands) if config.bands else list(DEFAULT_BANDS)
        dataset = _load_dataset(config)
    except (ValueError, OSError) as e:
        report(str(e))
        return EXIT_FAILED

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["label", "band"])
    for point in dataset.points:
        band = classify(point, bands)
        writer.writerow([point.label, band])

        if band == UNOCCUPIED:
            nearest = nearest_band(point, bands)
            if nearest is not None:
                logger.info("%s is unoccupied, %.6f from '%s'", point.label, nearest[1], nearest[0])

    return EXIT_OK


def cmd_cluster(config: RunConfig) -> int:
    try:
        dataset = _load_dataset(config)
        assignment = cluster(dataset, config.k, config.seed)
    except (ValueError, OSError) as e:
        report(str(e))
        return EXIT_FAILED

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["label", "cluster"])
    writer.writerows([point.label, label] for point, label in zip(dataset.points, assignment))

    return EXIT_OK


def cmd_trajectory(config: RunConfig) -> int:
    spec = config.spec

    try:
        spec, start = _anneal_start(config, spec)
        dataset = trajectory(
            spec,
            config.checkpoints,
            config.density_mode,
            start=start,
            workers=config.workers,
        )
    except (ValueError, OSError) as e:
        report(str(e))
        return EXIT_FAILED

    if config.out:
        emit_csv(dataset, config.out)
    else:
        sys.stdout.write(dataset_to_csv(dataset))

    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "measure": cmd_measure,
    "generate": cmd_generate,
    "plot": cmd_plot,
    "classify": cmd_classify,
    "cluster": cmd_cluster,
    "trajectory": cmd_trajectory,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = config_from_args(args)
    except ValidationError as e:
        report(f"invalid arguments: {e}")
        return EXIT_USAGE

    configure_logging(config)

    return COMMANDS[config.command](config)


if __name__ == "__main__":
    sys.exit(main())
