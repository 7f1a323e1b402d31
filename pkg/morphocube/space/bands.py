"""
Named regions of morphospace and first-match classification against them.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from pydantic import TypeAdapter, ValidationError

from morphocube.schema.layout import BandSpec, MorphoPoint
from morphocube.utils.util import PathOrUrl, read_bytes_from_path

logger = logging.getLogger(__name__)

UNOCCUPIED = "unoccupied"

# Checked in this order; the first band containing a point wins
DEFAULT_BANDS: Tuple[BandSpec, ...] = (
    BandSpec(name="urban-band", De=(0.35, 0.6), iPe=(0.25, 0.75), I=(0.2, 0.4)),
    BandSpec(name="non-urban", De=(0.0, 0.2), iPe=(0.75, 1.0), I=(0.0, 1.0)),
)

_band_table = TypeAdapter(List[BandSpec])


class BandTableError(ValueError):
    pass


def classify(point: MorphoPoint, bands: Sequence[BandSpec] = DEFAULT_BANDS) -> str:
    """
    Name of the first band containing ``point`` on all three axes, else ``"unoccupied"``.
    """
    for band in bands:
        if point in band:
            return band.name

    return UNOCCUPIED


def distance_to_band(point: MorphoPoint, band: BandSpec) -> float:
    return band.distance(point)


def nearest_band(point: MorphoPoint, bands: Sequence[BandSpec] = DEFAULT_BANDS) -> Optional[Tuple[str, float]]:
    """The closest band and its distance, ties going to the earlier band"""
    if not bands:
        return None

    best = min(bands, key=lambda band: band.distance(point))

    return best.name, best.distance(point)


def overlapping_bands(bands: Sequence[BandSpec]) -> List[Tuple[str, str]]:
    return [(a.name, b.name) for i, a in enumerate(bands) for b in bands[i + 1 :] if a.overlaps(b)]


def parse_bands(data: bytes) -> List[BandSpec]:
    """
    Parses a JSON band table: a list of objects with ``name``, ``De``, ``iPe`` and ``I``.

    Raises:
        BandTableError: The table is not valid JSON, a band is malformed, the table is
            empty or two bands share a name.
    """
    try:
        bands = _band_table.validate_json(data)
    except ValidationError as e:
        raise BandTableError(f"Invalid band table: {e}") from e

    if not bands:
        raise BandTableError("Band table is empty")

    names = [band.name for band in bands]
    if len(set(names)) != len(names):
        raise BandTableError("Band names must be unique")

    for first, second in overlapping_bands(bands):
        logger.warning("Bands '%s' and '%s' overlap; points in both classify as '%s'", first, second, first)

    return bands


def load_bands(path: PathOrUrl, **kwargs) -> List[BandSpec]:
    try:
        data = read_bytes_from_path(path, **kwargs)
    except OSError as e:
        raise BandTableError(f"Couldn't read band table {path}: {e}") from e

    return parse_bands(data)
