"""
Raster ingestion and elementary grid transforms.

Footprint maps are dark-on-light: a pixel darker than the threshold is built form.
Two file formats are understood, grayscale PGM (P2 or P5, maxval <= 255) and plain
text grids of '0'/'1' rows.
"""

import logging
from io import BytesIO
from pathlib import Path
from typing import Optional

import numpy as np
from PIL import Image, UnidentifiedImageError
from scipy import sparse

from morphocube.schema.grid import Grid, RasterFormat
from morphocube.utils.util import PathOrUrl, read_bytes_from_path, write_bytes_to_path

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 128
ANALYSIS_SIZE = 3000

BUILT_GRAY = 0
OPEN_GRAY = 255


class RasterError(ValueError):
    pass


class EmptyInputError(RasterError):
    def __init__(self, message: str = "empty input") -> None:
        super().__init__(message)


class MalformedHeaderError(RasterError):
    pass


class InconsistentRowsError(RasterError):
    def __init__(self, message: str, line_number: int) -> None:
        self.line_number = line_number
        super().__init__(message)


class InvalidCellError(RasterError):
    def __init__(self, message: str, line_number: int) -> None:
        self.line_number = line_number
        super().__init__(message)


class UnreadableRasterError(RasterError):
    pass


def threshold_pixels(pixels: np.ndarray, threshold: int = DEFAULT_THRESHOLD, *, invert: bool = False) -> Grid:
    """
    Maps gray levels to occupancy. Values below ``threshold`` are built, unless ``invert`` is set,
    in which case values at or above it are.
    """
    if not 0 <= threshold <= 255:
        raise ValueError("threshold must be a gray level between 0 and 255")

    built = pixels >= threshold if invert else pixels < threshold

    return Grid(cells=built)


def decode_pgm(data: bytes) -> np.ndarray:
    """
    Decodes P2/P5 bytes to an 8 bit gray array. Pillow rescales samples to 0-255 when maxval is lower.
    """
    try:
        image = Image.open(BytesIO(data), formats=["PPM"])
    except (UnidentifiedImageError, SyntaxError, ValueError) as e:
        raise MalformedHeaderError(f"Malformed PGM header: {e}") from e

    if image.mode != "L":
        raise MalformedHeaderError(f"Only 8 bit grayscale PGM is supported, got mode {image.mode}")

    width, height = image.size

    if width == 0 or height == 0:
        raise EmptyInputError()

    try:
        image.load()
    except (OSError, ValueError) as e:
        raise UnreadableRasterError(f"PGM pixel data could not be read: {e}") from e

    return np.asarray(image, dtype=np.uint8)


def decode_text_grid(data: bytes) -> Grid:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as e:
        raise MalformedHeaderError("Plain text grids may only contain '0' and '1'") from e

    lines = text.replace("\r\n", "\n").split("\n")

    while lines and not lines[-1].strip():
        lines.pop()

    # Line numbers in errors still count the skipped leading blank lines
    offset = 0
    while offset < len(lines) and not lines[offset].strip():
        offset += 1
    lines = lines[offset:]

    if not lines:
        raise EmptyInputError()

    expected = len(lines[0])

    for idx, line in enumerate(lines, start=offset + 1):
        if len(line) != expected:
            raise InconsistentRowsError(
                f"Row {idx} has {len(line)} cells, expected {expected}",
                line_number=idx,
            )

        if line.strip("01"):
            raise InvalidCellError(f"Row {idx} contains characters other than '0' and '1'", line_number=idx)

    if expected == 0:
        raise EmptyInputError()

    cells = np.frombuffer("".join(lines).encode("ascii"), dtype=np.uint8) - ord("0")

    return Grid(cells=cells.reshape(len(lines), expected))


def parse_raster(data: bytes, threshold: int = DEFAULT_THRESHOLD, *, invert: bool = False) -> Grid:
    """
    Parses raster bytes, sniffing the format from the first byte.
    """
    if not data.strip():
        raise EmptyInputError()

    head = data.lstrip()[:1]

    if head == b"P":
        pixels = decode_pgm(data)
        return threshold_pixels(pixels, threshold, invert=invert)

    if head in (b"0", b"1"):
        return decode_text_grid(data)

    raise MalformedHeaderError("Input is neither a PGM image nor a plain text grid")


def load_raster(path: PathOrUrl, threshold: int = DEFAULT_THRESHOLD, *, invert: bool = False, **kwargs) -> Grid:
    """
    Loads a footprint raster from any fsspec path.

    Args:
        path: Local path or fsspec URL of a PGM (P2/P5) image or plain text grid.
        threshold: Gray level; darker pixels are built form.
        invert: Treat light pixels as built form instead.
        **kwargs: Forwarded to ``fsspec.open``.

    Raises:
        UnreadableRasterError: The file could not be read.
        EmptyInputError: The file holds no cells.
        MalformedHeaderError: The header or format is not understood.
        InconsistentRowsError: A plain text grid is ragged.
    """
    try:
        data = read_bytes_from_path(path, **kwargs)
    except (OSError, ValueError) as e:
        raise UnreadableRasterError(f"Could not read {path}: {e}") from e

    grid = parse_raster(data, threshold, invert=invert)

    logger.info("Loaded %s as %dx%d grid with %d built cells", path, grid.width, grid.height, grid.built_count)

    return grid


def encode_raster(grid: Grid, format: RasterFormat = "pgm") -> bytes:
    if format == "text":
        rows = ["".join("1" if v else "0" for v in row) for row in grid.cells.tolist()]
        return ("\n".join(rows) + "\n").encode("ascii")

    pixels = np.where(grid.cells == 1, BUILT_GRAY, OPEN_GRAY).astype(np.uint8)

    if format == "pgm":
        buffer = BytesIO()
        Image.fromarray(pixels).save(buffer, format="PPM")
        return buffer.getvalue()

    if format == "pgm-p2":
        header = f"P2\n{grid.width} {grid.height}\n255\n"
        body = "\n".join(" ".join(str(v) for v in row) for row in pixels.tolist())
        return (header + body + "\n").encode("ascii")

    raise ValueError(f"Unknown raster format: {format}")


def format_from_path(path: PathOrUrl) -> RasterFormat:
    suffix = Path(str(path)).suffix.lower()

    if suffix in (".txt", ".grid"):
        return "text"

    return "pgm"


def save_raster(grid: Grid, path: PathOrUrl, format: Optional[RasterFormat] = None, **kwargs) -> PathOrUrl:
    """
    Writes a grid so that ``load_raster`` reads it back bit-exactly. Built cells are black.
    """
    format = format or format_from_path(path)

    write_bytes_to_path(path, encode_raster(grid, format), **kwargs)

    return path


def _overlap_matrix(n_source: int, n_target: int) -> sparse.csr_matrix:
    """
    Integer overlap lengths between target and source intervals, in units where a
    source cell is ``n_target`` long and a target cell is ``n_source`` long.
    """
    rows, cols, data = [], [], []

    for i in range(n_target):
        t0, t1 = i * n_source, (i + 1) * n_source
        first = t0 // n_target
        last = (t1 - 1) // n_target

        for r in range(first, last + 1):
            overlap = min((r + 1) * n_target, t1) - max(r * n_target, t0)
            if overlap > 0:
                rows.append(i)
                cols.append(r)
                data.append(overlap)

    return sparse.coo_matrix(
        (np.array(data, dtype=np.int64), (rows, cols)),
        shape=(n_target, n_source),
    ).tocsr()


def resample(grid: Grid, target_width: int, target_height: int, *, chunk_rows: int = 256) -> Grid:
    """
    Resamples by area-weighted majority vote; a target cell is built when built cells
    cover at least half of its source area. Upsampling replicates cells.
    """
    if target_width < 1 or target_height < 1:
        raise ValueError("Resample targets must be at least 1")

    if (target_width, target_height) == (grid.width, grid.height):
        return grid

    source_ratio = grid.width / grid.height
    target_ratio = target_width / target_height

    if abs(source_ratio - target_ratio) > 1e-9:
        logger.warning(
            "Resampling %dx%d to %dx%d changes the aspect ratio",
            grid.width,
            grid.height,
            target_width,
            target_height,
        )

    row_weights = _overlap_matrix(grid.height, target_height)
    col_weights = _overlap_matrix(grid.width, target_width)

    # Each target cell covers height * width units in the scaled coordinates
    cell_area = grid.height * grid.width

    source = grid.cells.astype(np.int64)
    output = np.empty((target_height, target_width), dtype=np.uint8)

    for start in range(0, target_height, chunk_rows):
        stop = min(start + chunk_rows, target_height)
        partial = row_weights[start:stop] @ source
        built_area = (col_weights @ partial.T).T

        output[start:stop] = 2 * built_area >= cell_area

    return Grid(cells=output)


def resample_to_analysis(grid: Grid, size: int = ANALYSIS_SIZE) -> Grid:
    return resample(grid, size, size)


def rotate90(grid: Grid) -> Grid:
    """Rotates 90 degrees clockwise"""
    return Grid(cells=np.rot90(grid.cells, k=-1))


def crop(grid: Grid, top: int, left: int, height: int, width: int) -> Grid:
    if top < 0 or left < 0 or height < 1 or width < 1:
        raise ValueError("Crop window must lie inside the grid and be at least 1x1")

    if top + height > grid.height or left + width > grid.width:
        raise ValueError("Crop window must lie inside the grid and be at least 1x1")

    return Grid(cells=grid.cells[top : top + height, left : left + width])
