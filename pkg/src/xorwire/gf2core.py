"""Bit-packed vectors and wiring matrices over GF(2).

Vectors and matrix columns are Python ints: bit ``i`` holds coordinate
``i + 1``.  All external text uses 1-based coordinates; conversion happens
in :func:`serialize` / :func:`parse` and the ``from_*``/``to_*`` helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_N = 4096


class DimensionError(ValueError):
    pass


class WiringParseError(ValueError):
    pass


class ClassViolation(ValueError):
    """Well-formed text describing a matrix that is not a wiring."""


def popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise DimensionError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError(f"bits exceed length {self.length}")

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "BitVector":
        bits = 0
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"non-binary entry {v!r}")
            bits |= v << i
        return cls(len(values), bits)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"non-binary characters in {text!r}")
        return cls.from_list([int(ch) for ch in text])

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        """Vector of length ``n`` with 1s at the given 1-based coordinates."""
        bits = 0
        for i in support:
            if not 1 <= i <= n:
                raise DimensionError(f"coordinate {i} out of range 1..{n}")
            bits |= 1 << (i - 1)
        return cls(n, bits)

    def __getitem__(self, i: int) -> int:
        """1-based coordinate access."""
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return (self.bits >> (i - 1)) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        _check_len(self, other)
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __and__(self, other: "BitVector") -> "BitVector":
        _check_len(self, other)
        return BitVector(self.length, self.bits & other.bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def support(self) -> list[int]:
        return [i + 1 for i in range(self.length) if (self.bits >> i) & 1]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())

    def as_tuple_str(self) -> str:
        return "(" + ",".join(str(b) for b in self.to_list()) + ")"


def _check_len(u: BitVector, v: BitVector) -> None:
    if u.length != v.length:
        raise DimensionError(f"length mismatch: {u.length} vs {v.length}")


def weight(v: BitVector) -> int:
    """Hamming weight |v|."""
    return popcount(v.bits)


@dataclass(frozen=True)
class WiringMatrix:
    """Square GF(2) matrix stored by column.

    ``cols[j]`` is the bitmask of bulbs toggled by button ``j + 1``.  A unit
    diagonal is required.
    """

    n: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.cols) != self.n:
            raise DimensionError("column count does not match n")
        for j, col in enumerate(self.cols):
            if col < 0 or col >> self.n:
                raise DimensionError(f"column {j + 1} has entries beyond row {self.n}")
            if not (col >> j) & 1:
                raise ValueError(f"w[{j + 1},{j + 1}] must be 1")

    @classmethod
    def identity(cls, n: int) -> "WiringMatrix":
        return cls(n, tuple(1 << j for j in range(n)))

    @classmethod
    def ones(cls, n: int) -> "WiringMatrix":
        """The all-ones block, written 1_n."""
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "WiringMatrix":
        n = len(rows)
        cols = [0] * n
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionError(f"row {i + 1} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"non-binary entry {v!r}")
                if v:
                    cols[j] |= 1 << i
        return cls(n, tuple(cols))

    def entry(self, i: int, j: int) -> int:
        """w_{i,j}, 1-based."""
        return (self.cols[j - 1] >> (i - 1)) & 1

    def column(self, j: int) -> BitVector:
        return BitVector(self.n, self.cols[j - 1])

    def row_mask(self, i: int) -> int:
        bit = 1 << (i - 1)
        return sum(1 << j for j, col in enumerate(self.cols) if col & bit)

    def rows(self) -> list[list[int]]:
        return [[(col >> i) & 1 for col in self.cols] for i in range(self.n)]

    def column_degree(self, j: int) -> int:
        return popcount(self.cols[j - 1])

    def degree(self) -> int:
        return max((popcount(c) for c in self.cols), default=0)

    def with_columns(self, cols: Sequence[int]) -> "WiringMatrix":
        return WiringMatrix(self.n, tuple(cols))

    def __str__(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.rows())


@dataclass(frozen=True)
class ClassSpec:
    """A(n, m), or A*(n, m) when ``exact``."""

    n: int
    m: int
    exact: bool = False

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 1:
            raise ValueError(f"invalid class parameters n={self.n}, m={self.m}")
        if self.exact and self.n < self.m:
            raise ValueError(f"A*({self.n},{self.m}) needs n >= m")

    def __str__(self) -> str:
        star = "*" if self.exact else ""
        return f"A{star}({self.n},{self.m})"


def apply(W: WiringMatrix, x: BitVector, c: BitVector) -> BitVector:
    """Bulb state Wx + c."""
    if x.length != W.n or c.length != W.n:
        raise DimensionError(f"expected vectors of length {W.n}")
    state = c.bits
    xb = x.bits
    j = 0
    while xb:
        if xb & 1:
            state ^= W.cols[j]
        xb >>= 1
        j += 1
    return BitVector(W.n, state)


def is_member(W: WiringMatrix, spec: ClassSpec) -> bool:
    if W.n != spec.n:
        return False
    for j, col in enumerate(W.cols):
        if not (col >> j) & 1:
            return False
        d = popcount(col)
        if d > spec.m or (spec.exact and d != spec.m):
            return False
    return True


def block_diag(blocks: Sequence[WiringMatrix]) -> WiringMatrix:
    cols: list[int] = []
    offset = 0
    for block in blocks:
        cols.extend(col << offset for col in block.cols)
        offset += block.n
    return WiringMatrix(offset, tuple(cols))


def concat(vectors: Sequence[BitVector]) -> BitVector:
    bits = 0
    offset = 0
    for v in vectors:
        bits |= v.bits << offset
        offset += v.length
    return BitVector(offset, bits)


def serialize(W: WiringMatrix, c: BitVector | None = None) -> str:
    if W.n > MAX_N:
        raise DimensionError(f"n={W.n} exceeds the supported maximum {MAX_N}")
    lines = [f"wiring {W.n}"]
    lines.extend("".join(map(str, row)) for row in W.rows())
    if c is not None:
        if c.length != W.n:
            raise DimensionError("configuration length differs from n")
        lines.append(f"c {c}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> tuple[WiringMatrix, BitVector | None]:
    """Inverse of :func:`serialize`.

    Raises :class:`WiringParseError` for malformed text.  A zero on the
    diagonal is a well-formed document but not a wiring; it raises
    :class:`ClassViolation` instead, naming the offending vertices.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise WiringParseError("empty document")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "wiring" or not head[1].isdigit():
        raise WiringParseError(f"bad header line {lines[0]!r}")
    n = int(head[1])
    if n > MAX_N:
        raise WiringParseError(f"n={n} exceeds the supported maximum {MAX_N}")
    if len(lines) not in (n + 1, n + 2):
        raise WiringParseError(f"expected {n} matrix rows, got {len(lines) - 1} lines")
    cols = [0] * n
    for i in range(n):
        row = lines[1 + i]
        if len(row) != n:
            raise WiringParseError(f"row {i + 1} has length {len(row)}, expected {n}")
        if any(ch not in "01" for ch in row):
            raise WiringParseError(f"row {i + 1} has non-binary characters")
        for j, ch in enumerate(row):
            if ch == "1":
                cols[j] |= 1 << i
    c = None
    if len(lines) == n + 2:
        tail = lines[n + 1]
        if not tail.startswith("c ") or len(tail) != n + 2 or any(ch not in "01" for ch in tail[2:]):
            raise WiringParseError(f"bad configuration line {tail!r}")
        c = BitVector.from_string(tail[2:]) if n else BitVector(0)
    missing = [j + 1 for j in range(n) if not (cols[j] >> j) & 1]
    if missing:
        raise ClassViolation(f"zero diagonal at vertices {missing}")
    return WiringMatrix(n, tuple(cols)), c
