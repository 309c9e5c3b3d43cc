"""Solver timings: large block constructions, and random dense wirings by rank."""

import argparse
import random
import time

from xorwire import construct
from xorwire.gf2core import BitVector, ClassSpec
from xorwire.sampling import random_wiring
from xorwire.solver import SolverInfeasible, column_rank, solve


def timed(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best * 1000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[30, 300, 2008, 4000])
    ap.add_argument("--dense", type=int, nargs="+", default=[8, 12, 16, 20, 22])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'family':<10} {'n':>6} {'value':>6} {'best ms':>10}")
    for family in ("mu2-star", "mu3-star", "nu-pairs"):
        for n in args.sizes:
            con = construct.build(family, n)
            try:
                r, ms = timed(lambda: solve(con.matrix, con.initial), args.repeats)
            except SolverInfeasible as exc:
                # e.g. mu3-star at n = 4 mod 6 is one big component
                print(f"{family:<10} {n:>6} {'-':>6} {'skipped':>10}  {exc}")
                continue
            print(f"{family:<10} {n:>6} {r.value:>6} {ms:>10.2f}")

    # one component of full-ish rank: cost grows like 2^rank
    rng = random.Random(args.seed)
    print(f"\n{'dense n':>8} {'rank':>5} {'value':>6} {'best ms':>10}")
    for n in args.dense:
        W = random_wiring(ClassSpec(n, n), rng)
        r, ms = timed(lambda: solve(W, BitVector.zeros(n)), args.repeats)
        print(f"{n:>8} {column_rank(W):>5} {r.value:>6} {ms:>10.2f}")


if __name__ == "__main__":
    main()
