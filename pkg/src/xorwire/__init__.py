"""Exact tools for the switches-and-bulbs problem: wirings over GF(2), the
maximum lit count M(W, c), extremal constructions and exhaustive checks."""

from xorwire.gf2core import BitVector, ClassSpec, WiringMatrix, apply, block_diag, is_member, parse, serialize, weight
from xorwire.solver import SolveResult, min_over_configs, press_average, solve, solve_naive, solve_restricted

__all__ = [
    "BitVector", "ClassSpec", "WiringMatrix", "apply", "block_diag", "is_member", "parse", "serialize",
    "weight", "SolveResult", "min_over_configs", "press_average", "solve", "solve_naive", "solve_restricted",
]
