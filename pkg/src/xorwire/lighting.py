"""Constructive optimal lighting for wirings of degree at most 2.

Each button toggles its own bulb and at most one other bulb f(i), so the
wiring graph is a functional graph: trees feeding into cycles, plus roots
with no successor.  Trees are lit from the leaves inward, then each cycle
is walked once, pressing every unlit vertex.  What remains unlit is one
vertex per odd component in which every vertex has a successor, which is
optimal because such components always have an even lit count.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from xorwire.gf2core import BitVector, WiringMatrix, popcount
from xorwire.solver import SolveResult
from xorwire.wiregraph import _mask_to_set, component_masks


class DegreeError(ValueError):
    pass


@dataclass(frozen=True)
class SuccessorMap:
    succ: tuple[int | None, ...]

    def __getitem__(self, i: int) -> int | None:
        return self.succ[i - 1]

    def __len__(self) -> int:
        return len(self.succ)

    def as_dict(self) -> dict[int, int | None]:
        return {i + 1: s for i, s in enumerate(self.succ)}


def successor_map(W: WiringMatrix) -> SuccessorMap:
    succ: list[int | None] = []
    for j, col in enumerate(W.cols):
        other = col & ~(1 << j)
        if popcount(other) > 1:
            raise DegreeError(f"column {j + 1} has degree {popcount(col)} > 2")
        succ.append(other.bit_length() if other else None)
    return SuccessorMap(tuple(succ))


def light_all(W: WiringMatrix) -> SolveResult:
    """Optimal press set from the all-off configuration."""
    f = successor_map(W)
    n = W.n
    indeg = [0] * (n + 1)
    for i in range(1, n + 1):
        if f[i] is not None:
            indeg[f[i]] += 1

    state = 0
    press = 0

    def press_if_unlit(v: int) -> None:
        nonlocal state, press
        if not (state >> (v - 1)) & 1:
            press |= 1 << (v - 1)
            state ^= W.cols[v - 1]

    done = [False] * (n + 1)
    heap = [i for i in range(1, n + 1) if indeg[i] == 0]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        done[v] = True
        press_if_unlit(v)
        s = f[v]
        if s is not None:
            indeg[s] -= 1
            if indeg[s] == 0:
                heapq.heappush(heap, s)

    # everything left lies on a cycle
    for start in range(1, n + 1):
        if done[start]:
            continue
        v = start
        while not done[v]:
            done[v] = True
            press_if_unlit(v)
            v = f[v]

    per_component = [(frozenset(_mask_to_set(m)), popcount(state & m)) for m in component_masks(W)]
    return SolveResult(popcount(state), BitVector(n, press), per_component)
