"""XOR-clause (XNF) interchange.

One clause per bulb: clause i is the XOR of the buttons wired to bulb i,
with the first literal negated when bulb i starts lit, so clause i is
satisfied exactly when bulb i ends lit.
"""

from __future__ import annotations

import numpy as np

from xorwire.gf2core import BitVector, WiringMatrix


def export_xnf(W: WiringMatrix, c: BitVector | None = None) -> str:
    if c is None:
        c = BitVector.zeros(W.n)
    lines = [f"p cnf {W.n} {W.n}"]
    for i, row in enumerate(W.rows()):
        lits = [j + 1 for j, v in enumerate(row) if v]
        if c.bits >> i & 1:
            lits[0] = -lits[0]
        lines.append("x " + " ".join(map(str, lits)) + " 0")
    return "\n".join(lines) + "\n"


def parse_xnf(text: str) -> tuple[int, list[list[int]]]:
    """Return (variable count, clauses as signed literal lists)."""
    nvars = None
    clauses = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        if line.startswith("p "):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad header {line!r}")
            nvars = int(parts[2])
            continue
        if not line.startswith("x"):
            raise ValueError(f"not an XOR clause: {line!r}")
        lits = [int(t) for t in line[1:].split()]
        if not lits or lits[-1] != 0:
            raise ValueError(f"clause not terminated by 0: {line!r}")
        clauses.append(lits[:-1])
    if nvars is None:
        raise ValueError("missing header")
    return nvars, clauses


def satisfied(clause: list[int], assignment: int) -> bool:
    """XOR of literals under ``assignment`` (bit v-1 is variable v) is true."""
    acc = 0
    for lit in clause:
        v = (assignment >> (abs(lit) - 1)) & 1
        acc ^= v ^ (lit < 0)
    return bool(acc)


def max_satisfiable(text: str) -> int:
    """Brute-force maximum number of simultaneously true clauses."""
    nvars, clauses = parse_xnf(text)
    if not clauses:
        return 0
    assignments = np.arange(1 << nvars, dtype=np.int64)
    count = np.zeros(1 << nvars, dtype=np.int64)
    for cl in clauses:
        acc = np.zeros(1 << nvars, dtype=np.int64)
        for lit in cl:
            acc ^= ((assignments >> (abs(lit) - 1)) & 1) ^ int(lit < 0)
        count += acc
    return int(count.max())
