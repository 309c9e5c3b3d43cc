import random

import pytest
from hypothesis import strategies as st

from xorwire.gf2core import BitVector, ClassSpec, WiringMatrix
from xorwire.sampling import random_wiring

ACCEPTANCE_LINES: list[str] = []


@st.composite
def wirings(draw, min_n=0, max_n=8, m=None, exact=False):
    """Wiring with every column degree <= m (== m when exact); m=None means unbounded."""
    n = draw(st.integers(min_n, max_n))
    if exact and m is not None and n < m:
        n = m
    cols = []
    for j in range(n):
        others = [i for i in range(n) if i != j]
        if m is None:
            support = draw(st.sets(st.sampled_from(others))) if others else set()
        elif exact:
            support = draw(st.sets(st.sampled_from(others), min_size=m - 1, max_size=m - 1)) if m > 1 else set()
        else:
            support = draw(st.sets(st.sampled_from(others), max_size=m - 1)) if others else set()
        cols.append((1 << j) | sum(1 << i for i in support))
    return WiringMatrix(n, tuple(cols))


@st.composite
def wiring_and_config(draw, **kw):
    W = draw(wirings(**kw))
    c = draw(st.integers(0, (1 << W.n) - 1)) if W.n else 0
    return W, BitVector(W.n, c)


def random_instance(rng: random.Random, max_n: int, m: int | None = None, exact: bool = False):
    """Seeded random (W, c) for the counted acceptance loops."""
    n = rng.randint(1, max_n)
    mm = rng.randint(1, n) if m is None else m
    if exact and n < mm:
        n = mm
    W = random_wiring(ClassSpec(n, mm, exact), rng)
    return W, BitVector(n, rng.getrandbits(n))


@pytest.fixture
def rng():
    return random.Random(20081340)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
