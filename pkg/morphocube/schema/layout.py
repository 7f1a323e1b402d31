from typing import Dict, Iterator, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, field_validator, model_validator
from typing_extensions import Annotated, Self

Axis = Literal["De", "iPe", "I"]
Category = Literal["city", "proto-urban", "non-urban", "theoretical"]
DensityMode = Literal["global", "hull"]

AXES: Tuple[Axis, ...] = ("De", "iPe", "I")

BoundedFloat = Annotated[float, Field(..., ge=0, le=1, description="A float between 0 and 1")]

PATTERN_CODES = 1 << 16
HOMOGENEOUS_CODES = (0, PATTERN_CODES - 1)


class Block(BaseModel):
    """
    A single urban block: one 4-connected component of built cells.

    ``perimeter`` only counts edges shared with an open cell inside the grid.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    id: PositiveInt
    area: PositiveInt = Field(description="A_i, the number of member cells")
    perimeter: NonNegativeInt = Field(description="P_i, built/open interior edges")
    cells: np.ndarray = Field(repr=False, description="(row, col) pairs of member cells")

    @model_validator(mode="after")
    def validate_perimeter(self) -> Self:
        if self.perimeter > 4 * self.area:
            raise ValueError("Block perimeter can't exceed four edges per cell")

        return self


class WindowHistogram(BaseModel):
    """
    Counts of 4x4 cell patterns over every window position of a grid.

    Patterns are packed row-major into 16 bits, the top-left cell being the most
    significant bit. ``counts`` is dense over all 65536 codes; the homogeneous
    codes 0 and 65535 are always zero.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    counts: np.ndarray = Field(repr=False)
    windows: NonNegativeInt = Field(description="All window positions, homogeneous ones included")

    @field_validator("counts", mode="before")
    @classmethod
    def validate_counts(cls, v):
        counts = np.asarray(v, dtype=np.int64)

        if counts.shape != (PATTERN_CODES,):
            raise ValueError(f"Histogram must hold {PATTERN_CODES} counts")

        if counts[0] != 0 or counts[-1] != 0:
            raise ValueError("Homogeneous patterns can't be counted")

        if (counts < 0).any():
            raise ValueError("Counts must be non-negative")

        counts = counts.copy()
        counts.setflags(write=False)

        return counts

    @model_validator(mode="after")
    def validate_total(self) -> Self:
        if self.total > self.windows:
            raise ValueError("Histogram total exceeds the number of windows")

        return self

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def skipped(self) -> int:
        """Homogeneous windows left out of the histogram"""
        return self.windows - self.total

    @property
    def distinct(self) -> int:
        return int(np.count_nonzero(self.counts))

    def __getitem__(self, code: int) -> int:
        return int(self.counts[code])

    def __len__(self):
        return self.distinct

    def items(self) -> Iterator[Tuple[int, int]]:
        for code in np.flatnonzero(self.counts):
            yield int(code), int(self.counts[code])

    def to_dict(self) -> Dict[int, int]:
        return dict(self.items())

    def probabilities(self) -> Dict[int, float]:
        """P_x for every observed pattern"""
        total = self.total
        return {code: count / total for code, count in self.items()}

    def __eq__(self, other):
        if not isinstance(other, WindowHistogram):
            return False

        return self.windows == other.windows and bool(np.array_equal(self.counts, other.counts))


class MorphoPoint(BaseModel):
    """
    Represents one configuration placed in morphospace.
    """

    label: str
    De: BoundedFloat
    iPe: BoundedFloat
    I: BoundedFloat  # noqa: E741
    population: Optional[NonNegativeInt] = None
    category: Optional[Category] = None

    def coordinates(self) -> Tuple[float, float, float]:
        return (self.De, self.iPe, self.I)

    def __getitem__(self, axis: Axis) -> float:
        if axis not in AXES:
            raise KeyError(axis)

        return getattr(self, axis)


class BandSpec(BaseModel):
    """
    A named box in morphospace, with closed intervals on each axis.
    """

    name: str
    De: Tuple[BoundedFloat, BoundedFloat]
    iPe: Tuple[BoundedFloat, BoundedFloat]
    I: Tuple[BoundedFloat, BoundedFloat]  # noqa: E741

    @model_validator(mode="after")
    def validate_ordering(self) -> Self:
        for axis in AXES:
            low, high = getattr(self, axis)
            if low > high:
                raise ValueError(f"Band '{self.name}' has an inverted {axis} interval")

        return self

    def __contains__(self, point: MorphoPoint) -> bool:
        return all(getattr(self, axis)[0] <= point[axis] <= getattr(self, axis)[1] for axis in AXES)

    def overlaps(self, other: "BandSpec") -> bool:
        return all(
            max(getattr(self, axis)[0], getattr(other, axis)[0]) <= min(getattr(self, axis)[1], getattr(other, axis)[1])
            for axis in AXES
        )

    def distance(self, point: MorphoPoint) -> float:
        """Euclidean distance from the point to the box, zero inside it"""
        total = 0.0
        for axis in AXES:
            low, high = getattr(self, axis)
            value = point[axis]
            gap = max(low - value, 0.0, value - high)
            total += gap * gap

        return total**0.5


class MorphoDataset(BaseModel):
    """
    An ordered collection of morphospace points with one provenance entry per point.
    """

    points: List[MorphoPoint] = Field(default_factory=list)
    provenance: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_labels(self) -> Self:
        if len(self.points) != len(self.provenance):
            raise ValueError("Every point needs exactly one provenance entry")

        labels = [point.label for point in self.points]
        if len(set(labels)) != len(labels):
            raise ValueError("Labels must be unique within a dataset")

        return self

    def add(self, point: MorphoPoint, source: str = "") -> None:
        if any(existing.label == point.label for existing in self.points):
            raise ValueError(f"Label '{point.label}' is already in the dataset")

        self.points.append(point)
        self.provenance.append(source)

    def __len__(self):
        return len(self.points)

    def items(self) -> Iterator[Tuple[MorphoPoint, str]]:
        return iter(zip(self.points, self.provenance))

    def __getitem__(self, index: int) -> MorphoPoint:
        return self.points[index]

    def coordinates(self) -> np.ndarray:
        """``(n, 3)`` array of (De, iPe, I) rows"""
        if not self.points:
            return np.zeros((0, 3), dtype=np.float64)

        return np.array([point.coordinates() for point in self.points], dtype=np.float64)
