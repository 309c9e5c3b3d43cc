"""Exhaustively compute mu, mu*, nu, nu* on small classes and compare with the closed forms.

    python3 scripts/theorem_grid.py --max-n 6 --jobs 4 --json grid.json
"""

import argparse
import sys
import time

from xorwire.enumeration import VerifyLimits, default_jobs, verify_theorems


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=None, help="cap every grid row at this n")
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--json", default=None, help="also write the full report here")
    args = ap.parse_args()

    limits = VerifyLimits(constructions=0, include_2008=False)
    if args.max_n is not None:
        limits = VerifyLimits(*(min(v, args.max_n) for v in (8, 8, 6, 6, 5)), constructions=0,
                              include_2008=False)
    t0 = time.perf_counter()
    report = verify_theorems(limits, jobs=args.jobs)
    print(f"{'kind':<4} {'n':>3} {'m':>3} {'value':>6} {'formula':>8} {'examined':>12}  verdict")
    for r in report.extremal:
        f = "-" if r.formula is None else r.formula
        print(f"{r.kind:<4} {r.n:>3} {r.m:>3} {r.value:>6} {f:>8} {r.examined:>12}  {r.verdict}")
    print(f"{len(report.extremal)} grid points in {time.perf_counter() - t0:.1f} s")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    sys.exit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
