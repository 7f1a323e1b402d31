"""
Shared plumbing for the configuration generators.

Every stochastic generator draws from a pseudorandom stream fully determined by the
spec's 64 bit seed. Vectorized generators use NumPy's PCG64 bit generator; the DLA walk
kernel uses xorshift64* seeded through SplitMix64. Neither ever touches OS entropy.
"""

import numpy as np

from morphocube.schema.generation import GeneratorKind, GenSpec

MASK64 = (1 << 64) - 1


class GenerationError(ValueError):
    pass


def require_kind(spec: GenSpec, kind: GeneratorKind) -> None:
    if spec.kind != kind:
        raise GenerationError(f"Expected a '{kind}' spec, got '{spec.kind}'")


def numpy_rng(spec: GenSpec) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(spec.seed))


def splitmix64(seed: int) -> int:
    """One SplitMix64 output for ``seed``; never returns zero for practical seeds"""
    z = (seed + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    z = z ^ (z >> 31)

    # xorshift generators must not start from an all zero state
    return z or 0x9E3779B97F4A7C15


def xorshift_state(spec: GenSpec) -> np.ndarray:
    return np.array([splitmix64(spec.seed)], dtype=np.uint64)


def center_cell(width: int, height: int):
    return height // 2, width // 2
