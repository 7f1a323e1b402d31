"""Models describing synthetic configuration processes and their outputs."""

import json
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, NonNegativeInt, PositiveFloat, model_validator
from typing_extensions import Annotated, Self

from morphocube.schema.grid import Grid
from morphocube.utils.util import hash_from_bytes

GeneratorKind = Literal["ordered", "random", "dispersed", "dla", "rrp", "anneal"]
AnnealMode = Literal["greedy", "metropolis"]
HaltReason = Literal["launch-circle", "exhausted"]

Probability = Annotated[float, Field(ge=0, le=1)]
Dimension = Annotated[int, Field(ge=4, description="Cells; at least 4 so every metric applies")]
Seed = Annotated[int, Field(ge=0, lt=1 << 64, description="A 64 bit seed")]

DEFAULT_SEED = 1984


class GenSpec(BaseModel):
    """
    The parameters of one synthetic configuration process.

    Only the parameters relevant to ``kind`` are read by the generator; the rest keep
    their defaults and are still part of the digest.
    """

    kind: GeneratorKind
    width: Dimension
    height: Dimension
    seed: Seed = DEFAULT_SEED

    # random
    p: Probability = 0.5

    # ordered
    block_size: Annotated[int, Field(ge=1)] = 8
    street_width: Annotated[int, Field(ge=1)] = 2

    # dispersed
    spacing: NonNegativeInt = 10

    # dla
    particles: NonNegativeInt = 1000

    # rrp
    cells_to_place: NonNegativeInt = 500

    # anneal
    steps: NonNegativeInt = 1000
    mode: AnnealMode = "greedy"
    initial_temperature: PositiveFloat = 1.0
    cooling: Annotated[float, Field(gt=0, le=1)] = 0.999

    @classmethod
    def square(cls, kind: GeneratorKind, size: int, **params) -> "GenSpec":
        return cls(kind=kind, width=size, height=size, **params)

    @property
    def total_cells(self) -> int:
        return self.width * self.height

    def digest(self) -> str:
        """A stable hash of the canonical JSON form of the spec"""
        canonical = json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))

        return hash_from_bytes(canonical.encode("utf-8"))

    def describe(self) -> str:
        return f"genspec:{self.kind}:{self.digest()}"


class AnnealStep(BaseModel):
    step: NonNegativeInt
    H: float = Field(description="Entropy of the current configuration after the step, in bits")
    accepted: bool


class AnnealTrace(BaseModel):
    """
    The entropy trace of an annealing run, one entry per proposed swap.
    """

    steps: List[AnnealStep] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_increasing(self) -> Self:
        indices = [entry.step for entry in self.steps]

        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValueError("Trace step indices must be strictly increasing")

        return self

    def __len__(self):
        return len(self.steps)

    def accepted(self) -> List[AnnealStep]:
        return [entry for entry in self.steps if entry.accepted]

    def to_csv(self) -> str:
        lines = ["step,H,accepted"]
        lines.extend(f"{entry.step},{entry.H:.12g},{int(entry.accepted)}" for entry in self.steps)

        return "\n".join(lines) + "\n"


class GrowthResult(BaseModel):
    """
    The output of an aggregation process together with how it stopped.
    """

    grid: Grid
    placed: NonNegativeInt = Field(description="Built cells placed, the seed cell included")
    halted: Optional[HaltReason] = Field(default=None, description="Why growth stopped before its budget")

    @property
    def completed(self) -> bool:
        return self.halted is None
