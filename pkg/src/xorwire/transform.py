"""Pivoting: rewiring that never increases M and keeps the wiring class."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from xorwire.gf2core import WiringMatrix


@dataclass(frozen=True)
class PivotSpec:
    vertex: int
    relative_to: frozenset[int] = field(default_factory=frozenset)


def pivot_partial(W: WiringMatrix, i: int, T: Iterable[int] = ()) -> WiringMatrix:
    """Replace column j by column i for every j in F(i) \\ T.

    F(i) is read from the input matrix.
    """
    if not 1 <= i <= W.n:
        raise IndexError(f"pivot vertex {i} out of range 1..{W.n}")
    T = set(T)
    if any(not 1 <= t <= W.n for t in T):
        raise IndexError(f"relative-to set must lie in 1..{W.n}")
    src = W.cols[i - 1]
    cols = list(W.cols)
    for j in range(W.n):
        if (src >> j) & 1 and (j + 1) not in T:
            cols[j] = src
    # WiringMatrix rejects a zero diagonal, so a broken rewrite fails loudly here
    return WiringMatrix(W.n, tuple(cols))


def pivot(W: WiringMatrix, i: int) -> WiringMatrix:
    return pivot_partial(W, i, ())


def apply_pivot(W: WiringMatrix, spec: PivotSpec) -> WiringMatrix:
    return pivot_partial(W, spec.vertex, spec.relative_to)
