"""Exact computation of M(W, c) = max_x |Wx + c|.

The value only depends on the column space of W, and it splits over the
weak components of the wiring graph, so :func:`solve` enumerates 2^rank
span elements per component instead of 2^n press vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from xorwire.gf2core import BitVector, DimensionError, WiringMatrix, popcount
from xorwire.wiregraph import component_lists

RANK_CAP = 30
NAIVE_MAX_N = 24
RESTRICT_MAX = 30
# Above this rank a component is scanned with numpy in blocks of 2^_LOW_BITS.
_VECTOR_RANK = 8
_LOW_BITS = 14


class SolverInfeasible(ValueError):
    def __init__(self, message: str, component: set[int] | None = None):
        super().__init__(message)
        self.component = component


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: BitVector
    per_component: list[tuple[frozenset[int], int]] = field(default_factory=list)


def _check(W: WiringMatrix, c: BitVector) -> None:
    if c.length != W.n:
        raise DimensionError(f"configuration has length {c.length}, wiring has n={W.n}")


def independent_columns(cols: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Greedy basis: keep each (index, column) not spanned by earlier kept ones.

    Columns are scanned in the given order.  Any press vector supported on
    the kept indices is the smallest member of its kernel coset, because
    every kernel vector has a dropped index as its highest set bit.
    """
    pivots: dict[int, int] = {}
    kept = []
    for j, col in cols:
        v = col
        while v:
            lead = v.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = v
                kept.append((j, col))
                break
            v ^= pivots[lead]
    return kept


def column_rank(W: WiringMatrix) -> int:
    return len(independent_columns(enumerate(W.cols)))


def _to_local(mask: int, positions: list[int]) -> int:
    out = 0
    for k, p in enumerate(positions):
        if (mask >> p) & 1:
            out |= 1 << k
    return out


def _max_over_span(basis: list[int], start: int) -> tuple[int, int]:
    """Max of |start + s| over the span of ``basis``.

    Returns (value, subset) where subset is the smallest basis-subset mask
    (read as an integer) attaining the value.  Enumeration is in Gray-code
    order with an incremental state.
    """
    r = len(basis)
    state = start
    best, best_g = popcount(state), 0
    g = 0
    for k in range(1, 1 << r):
        bit = (k & -k).bit_length() - 1
        g ^= 1 << bit
        state ^= basis[bit]
        w = popcount(state)
        if w > best or (w == best and g < best_g):
            best, best_g = w, g
    return best, best_g


def _span_table(basis: list[int]) -> np.ndarray:
    table = np.zeros(1, dtype=np.uint64)
    for b in basis:
        table = np.concatenate([table, table ^ np.uint64(b)])
    return table


def _max_over_span_np(basis: list[int], start: int) -> tuple[int, int]:
    """Blocked numpy version of :func:`_max_over_span`; needs 64-bit vectors."""
    low, high = basis[:_LOW_BITS], basis[_LOW_BITS:]
    table = _span_table(low)
    best, best_g = -1, 0
    offset = start
    g = 0
    for k in range(1 << len(high)):
        if k:
            bit = (k & -k).bit_length() - 1
            g ^= 1 << bit
            offset ^= high[bit]
        weights = np.bitwise_count(table ^ np.uint64(offset))
        w = int(weights.max())
        s = int(np.argmax(weights == w))
        cand = (g << len(low)) | s
        if w > best or (w == best and cand < best_g):
            best, best_g = w, cand
    return best, best_g


def solve(W: WiringMatrix, c: BitVector | None = None, rank_cap: int = RANK_CAP,
          component_order: list[int] | None = None) -> SolveResult:
    """Exact maximum lit count and the smallest press vector attaining it.

    ``component_order`` permutes the processing order of components (for
    determinism checks); the result does not depend on it.
    """
    if c is None:
        c = BitVector.zeros(W.n)
    _check(W, c)
    comps = component_lists(W)
    order = component_order if component_order is not None else range(len(comps))
    results: dict[int, tuple[int, int]] = {}
    for idx in order:
        members = comps[idx]
        kept = independent_columns((j, W.cols[j]) for j in members)
        if len(kept) > rank_cap:
            raise SolverInfeasible(
                f"component of size {len(members)} has rank {len(kept)} > cap {rank_cap}",
                {j + 1 for j in members},
            )
        local_basis = [_to_local(col, members) for _, col in kept]
        local_start = _to_local(c.bits, members)
        if len(members) <= 64 and len(kept) >= _VECTOR_RANK:
            value, subset = _max_over_span_np(local_basis, local_start)
        else:
            value, subset = _max_over_span(local_basis, local_start)
        press = 0
        for t, (j, _) in enumerate(kept):
            if (subset >> t) & 1:
                press |= 1 << j
        results[idx] = (value, press)
    total = sum(v for v, _ in results.values())
    witness = 0
    for _, press in results.values():
        witness |= press
    per_component = [(frozenset(v + 1 for v in comps[i]), results[i][0]) for i in range(len(comps))]
    return SolveResult(total, BitVector(W.n, witness), per_component)


def solve_restricted(W: WiringMatrix, c: BitVector, allowed: Iterable[int]) -> SolveResult:
    """Max of |Wx + c| over press vectors supported on ``allowed`` (1-based)."""
    _check(W, c)
    allowed = sorted(set(allowed))
    if any(not 1 <= a <= W.n for a in allowed):
        raise IndexError(f"allowed vertices must lie in 1..{W.n}")
    if len(allowed) > RESTRICT_MAX:
        raise SolverInfeasible(f"{len(allowed)} allowed presses exceed {RESTRICT_MAX}")
    value, subset = _max_over_span([W.cols[a - 1] for a in allowed], c.bits)
    press = 0
    for t, a in enumerate(allowed):
        if (subset >> t) & 1:
            press |= 1 << (a - 1)
    return SolveResult(value, BitVector(W.n, press))


def restricted_table(W: WiringMatrix, c: BitVector, allowed: Iterable[int]) -> list[tuple[BitVector, BitVector, int]]:
    """Every (x, Wx + c, |Wx + c|) with x supported on ``allowed``.

    Rows are ordered by the subset of ``allowed`` read as a binary number,
    lowest allowed vertex as the least significant bit.
    """
    _check(W, c)
    allowed = sorted(set(allowed))
    rows = []
    for g in range(1 << len(allowed)):
        x = 0
        state = c.bits
        for t, a in enumerate(allowed):
            if (g >> t) & 1:
                x |= 1 << (a - 1)
                state ^= W.cols[a - 1]
        rows.append((BitVector(W.n, x), BitVector(W.n, state), popcount(state)))
    return rows


def solve_naive(W: WiringMatrix, c: BitVector | None = None) -> SolveResult:
    """Reference implementation: try all 2^n press vectors."""
    if c is None:
        c = BitVector.zeros(W.n)
    _check(W, c)
    if W.n > NAIVE_MAX_N:
        raise SolverInfeasible(f"naive solver limited to n <= {NAIVE_MAX_N}")
    best, best_x = -1, 0
    for x in range(1 << W.n):
        state = c.bits
        j = 0
        xb = x
        while xb:
            if xb & 1:
                state ^= W.cols[j]
            xb >>= 1
            j += 1
        w = popcount(state)
        if w > best:
            best, best_x = w, x
    return SolveResult(best, BitVector(W.n, best_x))


def _rref(vectors: Iterable[int]) -> dict[int, int]:
    """Reduced echelon basis keyed by leading (highest) bit."""
    basis: dict[int, int] = {}
    for v in vectors:
        for lead in sorted(basis, reverse=True):
            if (v >> lead) & 1:
                v ^= basis[lead]
        if v:
            lead = v.bit_length() - 1
            for other in basis:
                if (basis[other] >> lead) & 1:
                    basis[other] ^= v
            basis[lead] = v
    return basis


def min_over_configs(W: WiringMatrix, rank_cap: int = 20, corank_cap: int = 20) -> tuple[int, BitVector]:
    """min over c of M(W, c), with the smallest minimizing c.

    Only one configuration per coset of the column space is tried: the
    subsets of unit vectors at non-pivot positions of the reduced column
    basis.  Each such vector is the smallest element of its coset.
    """
    basis = _rref(W.cols)
    r = len(basis)
    if r > rank_cap or W.n - r > corank_cap:
        raise SolverInfeasible(f"rank {r} / corank {W.n - r} exceed caps {rank_cap}/{corank_cap}")
    free = [p for p in range(W.n) if p not in basis]
    span_vectors = list(basis.values())
    best, best_c = W.n + 1, 0
    if W.n <= 64:
        table = _span_table(span_vectors)
        for sub in range(1 << len(free)):
            rep = sum(1 << free[t] for t in range(len(free)) if (sub >> t) & 1)
            value = int(np.bitwise_count(table ^ np.uint64(rep)).max())
            if value < best or (value == best and rep < best_c):
                best, best_c = value, rep
    else:
        for sub in range(1 << len(free)):
            rep = sum(1 << free[t] for t in range(len(free)) if (sub >> t) & 1)
            value, _ = _max_over_span(span_vectors, rep)
            if value < best or (value == best and rep < best_c):
                best, best_c = value, rep
    return best, BitVector(W.n, best_c)


def press_average(W: WiringMatrix, c: BitVector) -> Fraction:
    """Exact mean of |Wx + c| over all 2^n press vectors."""
    _check(W, c)
    if W.n > NAIVE_MAX_N:
        raise SolverInfeasible(f"press_average limited to n <= {NAIVE_MAX_N}")
    low, high = list(W.cols[:16]), list(W.cols[16:])
    table = _span_table(low)
    total = 0
    for k in range(1 << len(high)):
        offset = c.bits
        for t, col in enumerate(high):
            if (k >> t) & 1:
                offset ^= col
        total += int(np.bitwise_count(table ^ np.uint64(offset)).sum())
    return Fraction(total, 1 << W.n)
