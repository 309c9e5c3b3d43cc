"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from xorwire import construct, enumeration
from xorwire.gf2core import BitVector, ClassSpec, ClassViolation, WiringMatrix, WiringParseError, parse, serialize
from xorwire.lighting import DegreeError, light_all
from xorwire.sampling import random_wiring
from xorwire.solver import SolverInfeasible, restricted_table, solve, solve_naive, solve_restricted
from xorwire.transform import pivot_partial
from xorwire.wiregraph import EdgeView, export_dot
from xorwire.xnf import export_xnf


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("expected an unsigned 64-bit integer")
    return v


def _read_wiring(path: str) -> tuple[WiringMatrix, BitVector | None]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse(text)


def _initial(choice: str | None, W: WiringMatrix, from_file: BitVector | None) -> BitVector:
    if choice is None:
        return from_file if from_file is not None else BitVector.zeros(W.n)
    if choice == "zero":
        return BitVector.zeros(W.n)
    if choice == "even":
        return construct.even_indicator(W.n)
    if len(choice) != W.n or any(ch not in "01" for ch in choice):
        raise UsageError(f"--initial must be zero, even, or {W.n} binary digits")
    return BitVector.from_string(choice) if W.n else BitVector(0)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _wiring_json(W: WiringMatrix, c: BitVector | None) -> str:
    doc = {"n": W.n, "rows": ["".join(map(str, r)) for r in W.rows()], "c": str(c) if c is not None else None}
    return json.dumps(doc, indent=2) + "\n"


def _format_wiring(W: WiringMatrix, c: BitVector | None, fmt: str) -> str:
    if fmt == "wiring":
        return serialize(W, c)
    if fmt == "dot":
        return export_dot(EdgeView(W))
    if fmt == "xnf":
        return export_xnf(W, c)
    if fmt == "json":
        return _wiring_json(W, c)
    raise UsageError(f"unknown format {fmt}")


def cmd_construct(args) -> int:
    con = construct.build(args.family, args.n, args.m)
    _emit(_format_wiring(con.matrix, con.initial, args.format), args.output)
    print(f"{con.name}: class {con.spec}, claimed M = {con.claimed_value}", file=sys.stderr)
    return 0


def cmd_solve(args) -> int:
    W, c_file = _read_wiring(args.wiring)
    c = _initial(args.initial, W, c_file)
    if args.restrict is not None:
        result = solve_restricted(W, c, args.restrict)
        table = restricted_table(W, c, args.restrict)
    else:
        result = solve_naive(W, c) if args.naive else solve(W, c, rank_cap=args.rank_cap)
        table = None
    if args.format == "json":
        doc = {
            "n": W.n,
            "value": result.value,
            "witness": str(result.witness),
            "components": [{"vertices": sorted(v), "value": val} for v, val in result.per_component],
        }
        if table is not None:
            doc["table"] = [{"x": str(x), "state": str(s), "lit": w} for x, s, w in table]
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = [f"value {result.value}", f"witness {result.witness.as_tuple_str()}"]
    if result.per_component:
        lines.append(f"components {len(result.per_component)}")
    if table is not None:
        lines.append("x | Wx+c | lit")
        lines.extend(f"{x.as_tuple_str()} | {s.as_tuple_str()} | {w}" for x, s, w in table)
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_light(args) -> int:
    W, _ = _read_wiring(args.wiring)
    result = light_all(W)
    _emit(f"value {result.value}\nwitness {result.witness.as_tuple_str()}\n", args.output)
    return 0


def cmd_pivot(args) -> int:
    W, c = _read_wiring(args.wiring)
    out = pivot_partial(W, args.vertex, args.relative_to or ())
    _emit(_format_wiring(out, c, args.format), args.output)
    return 0


def _print_reports(reports, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(json.dumps([r.to_dict() for r in reports], indent=2) + "\n", out)
        return
    lines = [f"{'kind':<4} {'n':>3} {'m':>3} {'value':>6} {'formula':>8}  {'verdict':<10} {'examined':>10} {'ms':>9}"]
    for r in reports:
        f = "-" if r.formula is None else str(r.formula)
        lines.append(f"{r.kind:<4} {r.n:>3} {r.m:>3} {r.value:>6} {f:>8}  {r.verdict:<10} {r.examined:>10} {r.elapsed_ms:>9.1f}")
    _emit("\n".join(lines) + "\n", out)


def cmd_enumerate(args) -> int:
    if args.n is None or args.m is None:
        raise UsageError("enumerate needs --n and --m")
    fn = enumeration.compute_mu if args.kind == "mu" else enumeration.compute_nu
    report = fn(args.n, args.m, args.exact, jobs=args.jobs, prune=not args.no_prune, budget=args.budget)
    _print_reports([report], args.format, args.output)
    return 1 if report.verdict == "mismatch" else 0


def cmd_verify(args) -> int:
    limits = enumeration.VerifyLimits() if args.max_n is None else enumeration.VerifyLimits.capped(args.max_n)
    report = enumeration.verify_theorems(limits, jobs=args.jobs, budget=args.budget)
    if args.format == "json":
        _emit(report.to_json() + "\n", args.output)
    else:
        _print_reports(report.extremal, "table", args.output)
        bad = [c for c in report.constructions if not c.ok]
        print(f"constructions checked: {len(report.constructions)}, mismatches: {len(bad)}")
        for c in bad:
            print(f"  MISMATCH {c.family} n={c.n} m={c.m}: claimed {c.claimed}, solved {c.solved}")
        print("OK" if report.ok else "FAILED")
    return 0 if report.ok else 1


def cmd_export(args) -> int:
    W, c = _read_wiring(args.wiring)
    if args.initial is not None:
        c = _initial(args.initial, W, c)
    _emit(_format_wiring(W, c, args.format), args.output)
    return 0


def cmd_random(args) -> int:
    if args.n is None or args.m is None:
        raise UsageError("random needs --n and --m")
    seed = args.seed if args.seed is not None else int.from_bytes(os.urandom(8), "little")
    print(f"seed {seed}", file=sys.stderr)
    W = random_wiring(ClassSpec(args.n, args.m, args.exact), seed)
    _emit(_format_wiring(W, None, args.format), args.output)
    return 0


def cmd_bench(args) -> int:
    sizes = args.sizes or [30, 300, 3000]
    lines = [f"{'family':<10} {'n':>6} {'value':>6} {'ms':>10}"]
    for family in ("mu2", "mu2-star", "mu3-star", "nu-pairs"):
        for n in sizes:
            con = construct.build(family, n)
            t0 = time.perf_counter()
            try:
                value = solve(con.matrix, con.initial).value
            except SolverInfeasible:
                lines.append(f"{family:<10} {n:>6} {'-':>6} {'skipped':>10}")
                continue
            ms = (time.perf_counter() - t0) * 1000
            lines.append(f"{family:<10} {n:>6} {value:>6} {ms:>10.2f}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="xorwire", description="Exact tools for the switches-and-bulbs problem.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_choices=None, default_fmt=None):
        sp.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        if fmt_choices:
            sp.add_argument("--format", choices=fmt_choices, default=default_fmt)

    def class_flags(sp):
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--exact", action="store_true", help="exact column degree m (A*)")

    def search_flags(sp):
        sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: XORWIRE_JOBS or CPU count)")
        sp.add_argument("--budget", type=_u64, default=enumeration.DEFAULT_BUDGET)

    sp = sub.add_parser("construct", help="build a named wiring family")
    sp.add_argument("--family", required=True, choices=sorted(construct.FAMILIES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    common(sp, ["wiring", "dot", "xnf", "json"], "wiring")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("solve", help="compute M(W, c) exactly")
    sp.add_argument("wiring", help="wiring file, or - for stdin")
    sp.add_argument("--initial", help="zero, even, or a bit string (default: file's c line, else zero)")
    sp.add_argument("--restrict", type=_int_list, help="only press these vertices, e.g. 1,2,4")
    sp.add_argument("--naive", action="store_true", help="use the brute-force oracle")
    sp.add_argument("--rank-cap", type=int, default=30)
    common(sp, ["text", "json"], "text")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("light", help="constructive lighting for degree <= 2")
    sp.add_argument("wiring")
    common(sp)
    sp.set_defaults(func=cmd_light)

    sp = sub.add_parser("pivot", help="pivot a wiring about a vertex")
    sp.add_argument("wiring")
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--relative-to", type=_int_list, default=None)
    common(sp, ["wiring", "dot", "xnf", "json"], "wiring")
    sp.set_defaults(func=cmd_pivot)

    sp = sub.add_parser("enumerate", help="exhaustive mu / nu over a class")
    sp.add_argument("--kind", choices=["mu", "nu"], default="mu")
    class_flags(sp)
    search_flags(sp)
    sp.add_argument("--no-prune", action="store_true")
    common(sp, ["table", "json"], "table")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="check the closed forms on the exhaustive grid")
    sp.add_argument("--max-n", type=int, default=None)
    search_flags(sp)
    common(sp, ["table", "json"], "table")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="convert a wiring file")
    sp.add_argument("wiring")
    sp.add_argument("--initial")
    common(sp, ["wiring", "dot", "xnf", "json"], "wiring")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("random", help="seeded uniform random wiring")
    class_flags(sp)
    sp.add_argument("--seed", type=_u64)
    common(sp, ["wiring", "dot", "xnf", "json"], "wiring")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("bench", help="solver throughput on construction families")
    sp.add_argument("--sizes", type=_int_list)
    common(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 0) is None:
        args.jobs = enumeration.default_jobs()
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except ClassViolation as exc:
        print(f"warning: input is not a wiring: {exc}", file=sys.stderr)
        return 2
    except (UsageError, WiringParseError, SolverInfeasible, DegreeError, enumeration.BudgetExceeded,
            construct.UnsupportedFormula, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
