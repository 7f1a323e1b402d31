from .anneal import NoSwapPossibleError, anneal_entropy
from .base import GenerationError
from .dla import gen_dla
from .factory import default_anneal_start, generate
from .lattice import gen_dispersed, gen_ordered, gen_random
from .rrp import gen_rrp, placement_keeps_open_connected
from .trajectory import checkpoint_spec, trajectory

__all__ = [
    "GenerationError",
    "NoSwapPossibleError",
    "anneal_entropy",
    "checkpoint_spec",
    "default_anneal_start",
    "gen_dispersed",
    "gen_dla",
    "gen_ordered",
    "gen_random",
    "gen_rrp",
    "generate",
    "placement_keeps_open_connected",
    "trajectory",
]
