from typing import Iterable, List, Literal, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

RasterFormat = Literal["pgm", "pgm-p2", "text"]


class Grid(BaseModel):
    """
    Represents a binary occupancy matrix, where 1 is built form and 0 is open space.

    Cells are stored row-major as a read-only ``uint8`` array of shape ``(height, width)``.
    Grids are immutable once validated, so they may be shared freely between threads.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    cells: np.ndarray = Field(repr=False, description="Row-major binary occupancy")

    @field_validator("cells", mode="before")
    @classmethod
    def validate_cells(cls, v):
        array = np.asarray(v)

        if array.ndim != 2:
            raise ValueError("Grid cells must be a two dimensional array")

        if array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError("Grid must be at least 1x1")

        if array.dtype == np.bool_:
            array = array.astype(np.uint8)
        elif not np.isin(array, (0, 1)).all():
            raise ValueError("Grid cells must be 0 or 1")
        else:
            array = array.astype(np.uint8)

        # Always own the buffer so the caller can't mutate us behind our back
        array = np.ascontiguousarray(array).copy()
        array.setflags(write=False)

        return array

    @classmethod
    def from_array(cls, array) -> "Grid":
        return cls(cells=array)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "Grid":
        return cls(cells=np.array([list(row) for row in rows], dtype=np.int64))

    @classmethod
    def empty(cls, width: int, height: int) -> "Grid":
        return cls(cells=np.zeros((height, width), dtype=np.uint8))

    @classmethod
    def full(cls, width: int, height: int) -> "Grid":
        return cls(cells=np.ones((height, width), dtype=np.uint8))

    def to_rows(self) -> List[List[int]]:
        return self.cells.tolist()

    @property
    def width(self) -> int:
        return int(self.cells.shape[1])

    @property
    def height(self) -> int:
        return int(self.cells.shape[0])

    @property
    def shape(self):
        return self.cells.shape

    @property
    def total_cells(self) -> int:
        """C_T, the total number of cells"""
        return self.width * self.height

    @property
    def built_count(self) -> int:
        """BFc, the number of built form cells"""
        return int(np.count_nonzero(self.cells))

    @property
    def open_count(self) -> int:
        return self.total_cells - self.built_count

    @property
    def is_homogeneous(self) -> bool:
        built = self.built_count
        return built == 0 or built == self.total_cells

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return False

        return self.cells.shape == other.cells.shape and bool(np.array_equal(self.cells, other.cells))

    def __hash__(self):
        return hash((self.cells.shape, self.cells.tobytes()))

    def __repr__(self):
        return f"Grid(width={self.width}, height={self.height}, built={self.built_count})"
