"""Directed-graph view of a wiring.

Edge ``j -> i`` exists iff ``w[i, j] = 1`` and ``i != j``: pressing ``j``
toggles ``i``.  Vertex sets are plain Python sets of 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from xorwire.gf2core import WiringMatrix


def _mask_to_set(mask: int) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length())
        mask ^= low
    return out


@dataclass(frozen=True)
class EdgeView:
    W: WiringMatrix

    @property
    def n(self) -> int:
        return self.W.n

    def _mask(self, T: Iterable[int]) -> int:
        mask = 0
        for i in T:
            if not 1 <= i <= self.n:
                raise IndexError(f"vertex {i} out of range 1..{self.n}")
            mask |= 1 << (i - 1)
        return mask

    def forward_mask(self, T: Iterable[int]) -> int:
        out = 0
        for i in _mask_to_set(self._mask(T)):
            out |= self.W.cols[i - 1]
        return out

    def backward_mask(self, T: Iterable[int]) -> int:
        tmask = self._mask(T)
        return sum(1 << j for j, col in enumerate(self.W.cols) if col & tmask)

    def forward_set(self, T: Iterable[int]) -> set[int]:
        """F(T): T together with every vertex toggled by some press in T."""
        return _mask_to_set(self.forward_mask(T))

    def backward_set(self, T: Iterable[int]) -> set[int]:
        """F^{-1}(T): T together with every vertex whose press toggles T."""
        return _mask_to_set(self.backward_mask(T))

    def edges(self) -> list[tuple[int, int]]:
        """All (source, target) pairs, sorted."""
        out = []
        for j, col in enumerate(self.W.cols):
            for i in sorted(_mask_to_set(col & ~(1 << j))):
                out.append((j + 1, i))
        return out


def forward_set(view: EdgeView, T: Iterable[int]) -> set[int]:
    return view.forward_set(T)


def backward_set(view: EdgeView, T: Iterable[int]) -> set[int]:
    return view.backward_set(T)


def is_forward_invariant(view: EdgeView, T: Iterable[int]) -> bool:
    T = set(T)
    return view.forward_set(T) <= T


def is_backward_invariant(view: EdgeView, T: Iterable[int]) -> bool:
    T = set(T)
    return view.backward_set(T) <= T


def is_complete_subgraph(view: EdgeView, T: Iterable[int]) -> bool:
    tmask = view._mask(T)
    for j in _mask_to_set(tmask):
        if view.W.cols[j - 1] & tmask != tmask:
            return False
    return True


def component_lists(W: WiringMatrix) -> list[list[int]]:
    """Weak components as ascending 0-based index lists, ordered by smallest vertex."""
    n = W.n
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j, col in enumerate(W.cols):
        rest = col & ~(1 << j)
        while rest:
            low = rest & -rest
            rest ^= low
            ra, rb = find(low.bit_length() - 1), find(j)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def component_masks(W: WiringMatrix) -> list[int]:
    return [sum(1 << v for v in part) for part in component_lists(W)]


def components(view: EdgeView) -> list[set[int]]:
    """Weakly connected components, sorted by smallest contained vertex."""
    return [{v + 1 for v in part} for part in component_lists(view.W)]


def export_dot(view: EdgeView, name: str = "wiring") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {i};" for i in range(1, view.n + 1))
    lines.extend(f"  {j} -> {i};" for j, i in view.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
