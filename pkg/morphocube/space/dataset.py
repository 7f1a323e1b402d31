"""
The canonical CSV form of a morphospace dataset.

One header line ``label,category,De,iPe,I,population,source`` followed by one row per
point in dataset order. Coordinates carry 9 significant digits, missing values are empty,
and the file is UTF-8 with LF line endings.
"""

import csv
import io
import logging
from typing import Optional

from pydantic import ValidationError

from morphocube.schema.layout import MorphoDataset, MorphoPoint
from morphocube.utils.util import PathOrUrl, read_bytes_from_path, write_bytes_to_path

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("label", "category", "De", "iPe", "I", "population", "source")


class DatasetFormatError(ValueError):
    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def format_coordinate(value: float) -> str:
    return f"{value:.9g}"


def dataset_to_csv(dataset: MorphoDataset) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    writer.writerow(CSV_COLUMNS)

    for point, source in dataset.items():
        writer.writerow(
            [
                point.label,
                point.category or "",
                format_coordinate(point.De),
                format_coordinate(point.iPe),
                format_coordinate(point.I),
                "" if point.population is None else point.population,
                source,
            ]
        )

    return buffer.getvalue()


def emit_csv(dataset: MorphoDataset, path: PathOrUrl, **kwargs) -> PathOrUrl:
    write_bytes_to_path(path, dataset_to_csv(dataset).encode("utf-8"), **kwargs)
    logger.info("Wrote %d points to %s", len(dataset), path)

    return path


def _optional(value: str) -> Optional[str]:
    return value if value != "" else None


def dataset_from_csv(text: str) -> MorphoDataset:
    """
    Parses the canonical CSV form.

    Raises:
        DatasetFormatError: The header is wrong, a row has the wrong number of fields, a
            value is invalid or a label repeats. ``line_number`` is 1-based.
    """
    reader = csv.reader(io.StringIO(text, newline=""))

    try:
        header = next(reader)
    except StopIteration:
        raise DatasetFormatError("missing header", 1) from None

    if tuple(header) != CSV_COLUMNS:
        raise DatasetFormatError(f"expected header {','.join(CSV_COLUMNS)}", reader.line_num)

    dataset = MorphoDataset()

    for row in reader:
        line_number = reader.line_num

        if len(row) != len(CSV_COLUMNS):
            raise DatasetFormatError(f"expected {len(CSV_COLUMNS)} fields, got {len(row)}", line_number)

        fields = dict(zip(CSV_COLUMNS, row))

        try:
            point = MorphoPoint(
                label=fields["label"],
                category=_optional(fields["category"]),
                De=float(fields["De"]),
                iPe=float(fields["iPe"]),
                I=float(fields["I"]),
                population=_optional(fields["population"]),
            )
            dataset.add(point, fields["source"])
        except (ValueError, ValidationError) as e:
            raise DatasetFormatError(str(e), line_number) from e

    return dataset


def load_csv(path: PathOrUrl, **kwargs) -> MorphoDataset:
    data = read_bytes_from_path(path, **kwargs)

    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise DatasetFormatError("not UTF-8", data[: e.start].count(b"\n") + 1) from e

    dataset = dataset_from_csv(text)
    logger.info("Loaded %d points from %s", len(dataset), path)

    return dataset
