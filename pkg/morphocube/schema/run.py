from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, NonNegativeInt, PositiveInt, model_validator
from typing_extensions import Annotated, Self

from morphocube.schema.generation import DEFAULT_SEED, GenSpec, Seed
from morphocube.schema.grid import RasterFormat
from morphocube.schema.layout import DensityMode

Command = Literal["measure", "generate", "plot", "classify", "cluster", "trajectory"]
GrayLevel = Annotated[int, Field(ge=0, le=255)]


class RunConfig(BaseModel):
    """
    Everything one command line invocation needs, validated before any work starts.

    Only the fields the command reads are meaningful; no environment variable is ever
    consulted.
    """

    command: Command
    inputs: List[str] = Field(default_factory=list, description="Rasters to measure, or the dataset CSV")
    out: Optional[str] = Field(default=None, description="Output file or directory")
    dataset: Optional[str] = Field(default=None, description="Dataset CSV that measured points are appended to")

    density_mode: DensityMode = "global"
    threshold: GrayLevel = 128
    invert: bool = False
    resample: Optional[Tuple[PositiveInt, PositiveInt]] = Field(default=None, description="Target (width, height)")

    bands: Optional[str] = Field(default=None, description="JSON band table; the default bands otherwise")
    seed: Seed = DEFAULT_SEED
    workers: PositiveInt = 1

    spec: Optional[GenSpec] = None
    start: Optional[str] = Field(default=None, description="Start raster for annealing")
    format: Optional[RasterFormat] = None
    measure: bool = False
    trace: Optional[str] = Field(default=None, description="Annealing trace CSV")
    k: Optional[PositiveInt] = None
    checkpoints: List[NonNegativeInt] = Field(default_factory=list)

    verbosity: NonNegativeInt = 0
    quiet: bool = False

    @model_validator(mode="after")
    def validate_command(self) -> Self:
        if self.command in ("generate", "trajectory") and self.spec is None:
            raise ValueError(f"'{self.command}' needs a generator spec")

        if self.command == "measure" and not self.inputs:
            raise ValueError("'measure' needs at least one input raster")

        if self.command in ("plot", "classify", "cluster") and len(self.inputs) != 1:
            raise ValueError(f"'{self.command}' reads exactly one dataset")

        if self.command == "cluster" and self.k is None:
            raise ValueError("'cluster' needs --k")

        if self.command == "trajectory" and not self.checkpoints:
            raise ValueError("'trajectory' needs --checkpoints")

        return self
