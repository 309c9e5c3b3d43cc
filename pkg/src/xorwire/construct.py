"""Extremal wiring constructions and closed-form values of mu, mu*, nu, nu*.

Every builder returns a :class:`Construction` carrying the matrix, the
class it lives in, the initial configuration used, and the value of
M(matrix, initial) that the matching theorem predicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from xorwire.gf2core import BitVector, ClassSpec, WiringMatrix, block_diag, is_member

W3_ROWS = ((1, 0, 1), (1, 1, 0), (0, 1, 1))
W6_ROWS = (
    (1, 0, 0, 0, 0, 0),
    (1, 1, 1, 0, 0, 0),
    (0, 1, 1, 0, 0, 0),
    (0, 1, 1, 1, 1, 1),
    (1, 0, 0, 1, 1, 1),
    (0, 0, 0, 1, 1, 1),
)

KINDS = ("mu", "mu*", "nu", "nu*")


class UnsupportedFormula(ValueError):
    pass


class UnknownInThisWork(UnsupportedFormula):
    """No closed form is established for this (kind, m)."""


@dataclass(frozen=True)
class Construction:
    name: str
    matrix: WiringMatrix
    spec: ClassSpec
    initial: BitVector
    claimed_value: int

    def __post_init__(self) -> None:
        if not is_member(self.matrix, self.spec):
            raise AssertionError(f"{self.name} is not in {self.spec}")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def even_indicator(n: int) -> BitVector:
    """Configuration with bulb i lit iff i is even."""
    return BitVector.from_support(n, range(2, n + 1, 2))


def w3() -> Construction:
    W = WiringMatrix.from_rows(W3_ROWS)
    return Construction("w3", W, ClassSpec(3, 2, True), BitVector.zeros(3), 2)


def w6() -> Construction:
    W = WiringMatrix.from_rows(W6_ROWS)
    return Construction("w6", W, ClassSpec(6, 3, True), BitVector.zeros(6), 4)


def _fill(W: WiringMatrix, rows: range, cols: range) -> WiringMatrix:
    """Set w[i, j] = 1 for 1-based i in ``rows`` and j in ``cols``."""
    mask = sum(1 << (i - 1) for i in rows)
    new = list(W.cols)
    for j in cols:
        new[j - 1] |= mask
    return W.with_columns(new)


def nu_pairs(n: int) -> Construction:
    """diag(1_2, ..., 1_2[, 1_1]) with the even indicator: M = ceil(n/2) in A(n, 2)."""
    if n < 1:
        raise ValueError("nu_pairs needs n >= 1")
    blocks = [WiringMatrix.ones(2)] * (n // 2) + [WiringMatrix.ones(1)] * (n % 2)
    return Construction(f"nu-pairs({n})", block_diag(blocks), ClassSpec(n, 2), even_indicator(n), _ceil_div(n, 2))


def nu_star(n: int, m: int) -> Construction:
    """Member of A*(n, m) and a configuration c with M(W, c) = nu*(n, m).

    c is the even indicator, except that bulb n is also lit when n is odd
    and m is even.
    """
    if not n >= m >= 2:
        raise ValueError(f"nu_star needs n >= m >= 2, got n={n}, m={m}")
    ones2 = WiringMatrix.ones(2)
    W3 = WiringMatrix.from_rows(W3_ROWS)
    if (n - m) % 2 == 0:
        base = block_diag([ones2] * ((n - m) // 2) + [WiringMatrix.ones(m)])
        # m - 2 extra 1s at the bottom of each 1_2 column
        W = _fill(base, range(n - m + 3, n + 1), range(1, n - m + 1))
    elif n == m + 1:
        rows = [[1] * m + [1] for _ in range(m - 1)]
        rows.append([1] * m + [0])
        rows.append([0] * m + [1])
        W = WiringMatrix.from_rows(rows)
    elif n % 2 == 1:
        # n odd, m even
        base = block_diag([WiringMatrix.ones(m)] + [ones2] * ((n - m - 3) // 2) + [W3])
        W = _fill(base, range(3, m + 1), range(m + 1, n + 1))
    else:
        # n even, m odd
        base = block_diag([WiringMatrix.ones(m), W3] + [ones2] * ((n - m - 3) // 2))
        W = _fill(base, range(3, m + 1), range(m + 1, n + 1))
    initial = even_indicator(n)
    if n % 2 == 1 and m % 2 == 0:
        # The even indicator leaves one of the three unpaired bulbs lit here,
        # and even columns then allow all three.  Lighting bulb n as well
        # makes it two, which is the most the parity allows.
        initial = BitVector(n, initial.bits | 1 << (n - 1))
    return Construction(f"nu-star({n},{m})", W, ClassSpec(n, m, True), initial, formula("nu*", n, m))


def mu2(n: int) -> Construction:
    """floor(n/3) copies of W3 plus an identity block: M = ceil(2n/3) in A(n, 2)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    k, i = divmod(n, 3)
    W = block_diag([WiringMatrix.from_rows(W3_ROWS)] * k + [WiringMatrix.identity(i)])
    return Construction(f"mu2({n})", W, ClassSpec(n, 2), BitVector.zeros(n), 2 * k + i)


def mu2_star(n: int) -> Construction:
    if n < 2:
        raise ValueError("mu2_star needs n >= 2")
    W3 = WiringMatrix.from_rows(W3_ROWS)
    ones2 = WiringMatrix.ones(2)
    k, i = divmod(n, 3)
    if i == 0:
        blocks = [W3] * k
    elif i == 2:
        blocks = [W3] * k + [ones2]
    else:
        blocks = [W3] * (k - 1) + [ones2, ones2]
    W = block_diag(blocks)
    return Construction(f"mu2-star({n})", W, ClassSpec(n, 2, True), BitVector.zeros(n), 2 * _ceil_div(n, 3))


def extend_degree(base: Construction, n_extra: int) -> Construction:
    """Grow a member of A*(n, m) into A*(n + n', m + 1), raising M by at most n'.

    The n' new rows under ``base`` hold copies of I_{n'} tiled across the
    first n columns; each new column n + j repeats column j.
    """
    n, m = base.spec.n, base.spec.m
    if not base.spec.exact:
        raise ValueError("extend_degree needs an exact-degree base")
    if not 1 <= n_extra <= n:
        raise ValueError(f"need 1 <= n' <= n, got n'={n_extra}, n={n}")
    cols = list(base.matrix.cols)
    for j in range(n):
        cols[j] |= 1 << (n + j % n_extra)
    cols.extend(cols[j] for j in range(n_extra))
    N = n + n_extra
    W = WiringMatrix(N, tuple(cols))
    return Construction(
        f"extend({base.name},{n_extra})", W, ClassSpec(N, m + 1, True), BitVector.zeros(N),
        base.claimed_value + n_extra,
    )


def mu3(n: int) -> Construction:
    c = mu2(n)
    return Construction(f"mu3({n})", c.matrix, ClassSpec(n, 3), c.initial, c.claimed_value)


def mu3_star(n: int) -> Construction:
    if n < 3:
        raise ValueError("mu3_star needs n >= 3")
    if n == 3:
        W = WiringMatrix.ones(3)
        return Construction("mu3-star(3)", W, ClassSpec(3, 3, True), BitVector.zeros(3), 3)
    if n % 6 == 0:
        W = block_diag([WiringMatrix.from_rows(W6_ROWS)] * (n // 6))
        built = Construction("", W, ClassSpec(n, 3, True), BitVector.zeros(n), 2 * n // 3)
    elif n % 6 == 3:
        built = extend_degree(mu2_star(n - 3), 3)
    else:
        i = n % 3
        built = extend_degree(mu2_star(n - i), i)
    if built.claimed_value != formula("mu*", n, 3):
        raise AssertionError(f"mu3_star({n}) claims {built.claimed_value}")
    return Construction(f"mu3-star({n})", built.matrix, built.spec, built.initial, built.claimed_value)


def formula(kind: str, n: int, m: int) -> int:
    """Closed-form mu(n,m), mu*(n,m), nu(n,m) or nu*(n,m)."""
    if kind not in KINDS:
        raise UnsupportedFormula(f"unknown kind {kind!r}")
    if n < 0 or m < 1:
        raise UnsupportedFormula(f"bad arguments n={n}, m={m}")
    exact = kind.endswith("*")
    if exact and n < m:
        raise UnsupportedFormula(f"{kind}({n},{m}) needs n >= m")
    if m == 1:
        # only the identity wiring exists
        return n
    if kind.startswith("nu"):
        base = _ceil_div(n, 2)
        if exact and n % 2 == 0 and m % 2 == 1:
            return base + 1
        return base
    if m >= 4:
        raise UnknownInThisWork(f"{kind}(n,{m}) has no closed form here for m >= 4")
    if kind == "mu":
        # mu(n,3) = mu(n,2)
        return _ceil_div(2 * n, 3)
    if m == 2:
        return 2 * _ceil_div(n, 3)
    if n % 6 == 3:
        return 4 * ((n + 3) // 6) - 1
    return _ceil_div(2 * n, 3)


FAMILIES: dict[str, Callable[..., Construction]] = {
    "w3": lambda n=None, m=None: w3(),
    "w6": lambda n=None, m=None: w6(),
    "nu-pairs": lambda n, m=None: nu_pairs(n),
    "nu-star": lambda n, m: nu_star(n, m),
    "mu2": lambda n, m=None: mu2(n),
    "mu2-star": lambda n, m=None: mu2_star(n),
    "mu3": lambda n, m=None: mu3(n),
    "mu3-star": lambda n, m=None: mu3_star(n),
}


def build(family: str, n: int | None = None, m: int | None = None) -> Construction:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family not in ("w3", "w6") and n is None:
        raise ValueError(f"family {family} needs n")
    if family == "nu-star" and m is None:
        raise ValueError("family nu-star needs m")
    return FAMILIES[family](n, m)
