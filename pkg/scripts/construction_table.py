"""Tabulate solved vs claimed values for every construction family up to n."""

import argparse
import sys

from xorwire.enumeration import check_constructions


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=30)
    ap.add_argument("--no-2008", action="store_true", help="skip mu2-star(2008)")
    ap.add_argument("--only-mismatches", action="store_true")
    args = ap.parse_args()

    checks = check_constructions(args.limit, include_2008=not args.no_2008)
    print(f"{'family':<10} {'n':>5} {'m':>3} {'claimed':>8} {'solved':>7}")
    for c in checks:
        if args.only_mismatches and c.ok:
            continue
        m = "-" if c.m is None else c.m
        print(f"{c.family:<10} {c.n:>5} {m:>3} {c.claimed:>8} {c.solved:>7}{'' if c.ok else '  MISMATCH'}")
    bad = sum(not c.ok for c in checks)
    print(f"{len(checks)} constructions, {bad} mismatches")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
