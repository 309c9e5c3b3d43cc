"""Exhaustive computation of mu, mu*, nu, nu* over small wiring classes."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb, prod
from typing import Iterator

import numpy as np

from xorwire import construct
from xorwire.construct import UnsupportedFormula
from xorwire.gf2core import BitVector, ClassSpec, WiringMatrix
from xorwire.solver import min_over_configs, solve

DEFAULT_BUDGET = 10**8
# the kernel keeps a 2^n span table and 64-bit vectors
KERNEL_MAX_N = 20


class BudgetExceeded(ValueError):
    def __init__(self, spec: ClassSpec, total: int, budget: int):
        super().__init__(f"{spec} has {total} wirings, over the budget of {budget}")
        self.total = total


def default_jobs() -> int:
    env = os.environ.get("XORWIRE_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def column_choices(spec: ClassSpec) -> list[list[int]]:
    """Allowed column bitmasks per column, in colex order of the off-diagonal support."""
    n, m = spec.n, spec.m
    out = []
    for j in range(n):
        others = [i for i in range(n) if i != j]
        sizes = [m - 1] if spec.exact else range(min(m - 1, n - 1) + 1)
        supports = [sum(1 << i for i in sub) for s in sizes for sub in combinations(others, s)]
        out.append(sorted(s | (1 << j) for s in supports))
    return out


def class_size(spec: ClassSpec) -> int:
    n, m = spec.n, spec.m
    if spec.exact:
        per = comb(n - 1, m - 1)
    else:
        per = sum(comb(n - 1, s) for s in range(min(m - 1, n - 1) + 1))
    return per**n


def enumerate_class(spec: ClassSpec, budget: int = DEFAULT_BUDGET) -> Iterator[WiringMatrix]:
    """Every member of the class once; column 1 varies slowest."""
    total = class_size(spec)
    if total > budget:
        raise BudgetExceeded(spec, total, budget)
    choices = column_choices(spec)
    for cols in product(*choices):
        yield WiringMatrix(spec.n, cols)


@dataclass
class ExtremalReport:
    kind: str
    n: int
    m: int
    exact: bool
    value: int
    witness: WiringMatrix
    witness_c: BitVector | None
    formula: int | None
    verdict: str
    examined: int
    elapsed_ms: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "exact": self.exact,
            "value": self.value,
            "formula": self.formula,
            "verdict": self.verdict,
            "witness": {
                "rows": ["".join(map(str, r)) for r in self.witness.rows()],
                "c": str(self.witness_c) if self.witness_c is not None else None,
            },
            "examined": self.examined,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _choice_array(choices: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    width = max(len(c) for c in choices)
    arr = np.zeros((len(choices), width), dtype=np.int64)
    for j, row in enumerate(choices):
        arr[j, : len(row)] = row
    return arr, np.array([len(c) for c in choices], dtype=np.int64)


def _run_partition(args):
    from xorwire._kernels import search

    n, arr, counts, p, mode, prune = args
    value, ci, c, examined = search(n, arr, counts, p, p + 1, mode, prune)
    return int(value), [int(t) for t in ci], int(c), int(examined)


def _search(spec: ClassSpec, mode: int, jobs: int, prune: bool, budget: int):
    total = class_size(spec)
    if total > budget:
        raise BudgetExceeded(spec, total, budget)
    if spec.n > KERNEL_MAX_N:
        raise BudgetExceeded(spec, total, 0)
    choices = column_choices(spec)
    if spec.n == 0:
        return 0, WiringMatrix(0, ()), 0, 1
    arr, counts = _choice_array(choices)
    tasks = [(spec.n, arr, counts, p, mode, prune) for p in range(len(choices[0]))]
    if jobs <= 1 or len(tasks) == 1:
        results = [_run_partition(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_partition, tasks))
    # min value, ties to the earliest partition: the first minimiser overall
    value, ci, c, _ = min(results, key=lambda r: r[0])
    examined = sum(r[3] for r in results)
    W = WiringMatrix(spec.n, tuple(choices[j][ci[j]] for j in range(spec.n)))
    return value, W, c, examined


def _formula_or_none(kind: str, n: int, m: int) -> int | None:
    try:
        return construct.formula(kind, n, m)
    except UnsupportedFormula:
        return None


def _report(kind, spec, value, W, c, examined, t0) -> ExtremalReport:
    f = _formula_or_none(kind, spec.n, spec.m)
    verdict = "no-formula" if f is None else ("match" if f == value else "mismatch")
    return ExtremalReport(kind, spec.n, spec.m, spec.exact, value, W, c, f, verdict, examined,
                          (time.perf_counter() - t0) * 1000)


def compute_mu(n: int, m: int, exact: bool = False, jobs: int = 1, prune: bool = True,
               budget: int = DEFAULT_BUDGET) -> ExtremalReport:
    from xorwire._kernels import MODE_MU

    spec = ClassSpec(n, m, exact)
    t0 = time.perf_counter()
    value, W, _, examined = _search(spec, MODE_MU, jobs, prune, budget)
    if solve(W).value != value:
        raise AssertionError(f"witness for mu{'*' if exact else ''}({n},{m}) does not re-solve")
    return _report("mu*" if exact else "mu", spec, value, W, None, examined, t0)


def compute_nu(n: int, m: int, exact: bool = False, jobs: int = 1, prune: bool = True,
               budget: int = DEFAULT_BUDGET) -> ExtremalReport:
    from xorwire._kernels import MODE_NU

    spec = ClassSpec(n, m, exact)
    t0 = time.perf_counter()
    value, W, c, examined = _search(spec, MODE_NU, jobs, prune, budget)
    c_vec = BitVector(n, c)
    checked, _ = min_over_configs(W)
    if checked != value or solve(W, c_vec).value != value:
        raise AssertionError(f"witness for nu{'*' if exact else ''}({n},{m}) does not re-solve")
    return _report("nu*" if exact else "nu", spec, value, W, c_vec, examined, t0)


@dataclass(frozen=True)
class VerifyLimits:
    mu2: int = 8
    mu2_star: int = 8
    mu3: int = 6
    mu3_star: int = 6
    nu: int = 5
    constructions: int = 30
    include_2008: bool = True

    @classmethod
    def capped(cls, max_n: int) -> "VerifyLimits":
        base = cls()
        return cls(min(base.mu2, max_n), min(base.mu2_star, max_n), min(base.mu3, max_n),
                   min(base.mu3_star, max_n), min(base.nu, max_n), min(base.constructions, max_n),
                   include_2008=max_n >= 2008)


@dataclass
class ConstructionCheck:
    family: str
    n: int
    m: int | None
    claimed: int
    solved: int

    @property
    def ok(self) -> bool:
        return self.claimed == self.solved

    def to_dict(self) -> dict:
        return {"family": self.family, "n": self.n, "m": self.m, "claimed": self.claimed,
                "value": self.solved, "verdict": "match" if self.ok else "mismatch"}


@dataclass
class VerifyReport:
    extremal: list[ExtremalReport]
    constructions: list[ConstructionCheck]

    @property
    def ok(self) -> bool:
        return all(r.verdict != "mismatch" for r in self.extremal) and all(c.ok for c in self.constructions)

    def to_json(self, with_timing: bool = True) -> str:
        rows = [r.to_dict() for r in self.extremal]
        if not with_timing:
            for r in rows:
                r.pop("elapsed_ms")
        doc = {"reports": rows, "constructions": [c.to_dict() for c in self.constructions], "ok": self.ok}
        return json.dumps(doc, indent=2)


def theorem_grid(limits: VerifyLimits) -> list[tuple[str, int, int]]:
    grid = []
    grid += [("mu", n, 2) for n in range(1, limits.mu2 + 1)]
    grid += [("mu*", n, 2) for n in range(2, limits.mu2_star + 1)]
    grid += [("mu", n, 3) for n in range(1, limits.mu3 + 1)]
    grid += [("mu*", n, 3) for n in range(3, limits.mu3_star + 1)]
    for n in range(2, limits.nu + 1):
        for m in range(2, n + 1):
            grid += [("nu", n, m), ("nu*", n, m)]
    return grid


def construction_cases(limit: int, include_2008: bool = True) -> list[tuple[str, int | None, int | None]]:
    cases: list[tuple[str, int | None, int | None]] = [("w3", None, None), ("w6", None, None)]
    cases += [("nu-pairs", n, None) for n in range(1, limit + 1)]
    nu_star_ns = sorted(set(range(2, limit + 1)) | {9, 10, 11, 12})
    cases += [("nu-star", n, m) for n in nu_star_ns for m in range(2, n + 1)]
    cases += [("mu2", n, None) for n in range(0, limit + 1)]
    cases += [("mu2-star", n, None) for n in range(2, limit + 1)]
    if include_2008:
        cases.append(("mu2-star", 2008, None))
    cases += [("mu3", n, None) for n in range(0, limit + 1)]
    cases += [("mu3-star", n, None) for n in range(3, limit + 1)]
    return cases


def check_constructions(limit: int, include_2008: bool = True) -> list[ConstructionCheck]:
    out = []
    for family, n, m in construction_cases(limit, include_2008):
        con = construct.build(family, n, m)
        value = solve(con.matrix, con.initial).value
        out.append(ConstructionCheck(family, con.matrix.n, m, con.claimed_value, value))
    return out


def verify_theorems(limits: VerifyLimits = VerifyLimits(), jobs: int = 1,
                    budget: int = DEFAULT_BUDGET) -> VerifyReport:
    reports = []
    for kind, n, m in theorem_grid(limits):
        exact = kind.endswith("*")
        fn = compute_mu if kind.startswith("mu") else compute_nu
        reports.append(fn(n, m, exact, jobs=jobs, budget=budget))
    return VerifyReport(reports, check_constructions(limits.constructions, limits.include_2008))
