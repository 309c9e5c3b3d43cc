"""Seeded uniform sampling of wirings, one column at a time."""

from __future__ import annotations

import random
from math import comb

from xorwire.gf2core import ClassSpec, WiringMatrix


def _unrank_combination(pool: list[int], k: int, rank: int) -> list[int]:
    """The rank-th k-subset of ``pool`` in lexicographic order."""
    out = []
    start = 0
    for remaining in range(k, 0, -1):
        for idx in range(start, len(pool)):
            block = comb(len(pool) - idx - 1, remaining - 1)
            if rank < block:
                out.append(pool[idx])
                start = idx + 1
                break
            rank -= block
    return out


def random_column(n: int, j: int, m: int, exact: bool, rng: random.Random) -> int:
    others = [i for i in range(n) if i != j]
    sizes = [m - 1] if exact else list(range(min(m - 1, n - 1) + 1))
    counts = [comb(n - 1, s) for s in sizes]
    r = rng.randrange(sum(counts))
    for s, cnt in zip(sizes, counts):
        if r < cnt:
            support = _unrank_combination(others, s, r)
            return (1 << j) | sum(1 << i for i in support)
        r -= cnt
    raise AssertionError("unreachable")


def random_wiring(spec: ClassSpec, seed: int | random.Random) -> WiringMatrix:
    """Uniform member of the class: each column uniform over its allowed supports.

    With an integer seed the result depends only on (n, m, exact, seed).
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    cols = tuple(random_column(spec.n, j, spec.m, spec.exact, rng) for j in range(spec.n))
    return WiringMatrix(spec.n, cols)
