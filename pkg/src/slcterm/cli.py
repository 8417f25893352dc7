"""Command line front end.

Exit codes: 0 analysis completed, 2 bad input or usage, 3 scan limit
exceeded, 4 oracle disagreement under --compare.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analyzer import (
    CycleWitness,
    cycle1,
    cycle2,
    decide,
    witness_trace,
)
from .collatz import (
    GenCollatz,
    WeakCollatz,
    orbit,
    reachability_scan,
    residue_histogram,
    to_slc,
)
from .lattice import DEFAULT_SCAN_LIMIT, ScanLimitExceededError
from .loopio import (
    LoopFormatError,
    SchemaMismatchError,
    emit_json,
    emit_report,
    emit_text,
    parse_json,
    parse_text,
)
from .oracle import build_graph, find_cycle, find_escape
from .poly2 import (
    Cone,
    HalfPlane,
    HPoly,
    Line,
    Plane,
    Pointed2,
    Ray,
    Zero,
    decompose,
    is_empty,
)


def _read_loop(path: str) -> HPoly:
    data = sys.stdin.read() if path == "-" else Path(path).read_text()
    if data.lstrip().startswith("{"):
        return parse_json(data)
    return parse_text(data)


def _ints(xs) -> str:
    return " ".join(str(x) for x in xs)


def _fmt_pt(pt) -> str:
    return f"({pt[0]}, {pt[1]})"


def _fmt_cone(c: Cone) -> str:
    if isinstance(c, Zero):
        return "zero"
    if isinstance(c, Ray):
        return f"ray {_fmt_pt(c.v)}"
    if isinstance(c, Line):
        return f"line {_fmt_pt(c.v)}"
    if isinstance(c, HalfPlane):
        return f"half-plane boundary={_fmt_pt(c.boundary)} witness={_fmt_pt(c.interior_witness)}"
    if isinstance(c, Pointed2):
        return f"wedge {_fmt_pt(c.v1)} {_fmt_pt(c.v2)}"
    return "plane"


# ---------------------------------------------------------------------------
# loop commands
# ---------------------------------------------------------------------------


def _cmd_decide(args) -> int:
    p = _read_loop(args.file)
    v = decide(p, assume_conjecture=args.assume_reachability, scan_limit=args.scan_limit)
    if args.json:
        d = None if is_empty(p) else decompose(p)
        print(emit_report(v, d, args.assume_reachability))
        return 0
    print(f"{v.kind} {v.label}")
    if isinstance(v.witness, CycleWitness):
        print(f"cycle: {_ints(v.witness.states)}")
    elif v.witness is not None and v.witness.prefix:
        print(f"trace: {_ints(v.witness.prefix)}")
    return 0


def _cmd_cycles(args) -> int:
    p = _read_loop(args.file)
    s = cycle1(p)
    pair = cycle2(p, args.scan_limit)
    print("cycle1: " + ("none" if s is None else str(s)))
    print("cycle2: " + ("none" if pair is None else _ints(pair)))
    return 0


def _cmd_decompose(args) -> int:
    p = _read_loop(args.file)
    if is_empty(p):
        print("empty")
        return 0
    d = decompose(p)
    print("vertices: " + " ".join(_fmt_pt(v) for v in d.vertices))
    print(f"cone: {_fmt_cone(d.cone)}")
    print(f"bound: {d.vertex_bound}")
    return 0


def _cmd_witness(args) -> int:
    p = _read_loop(args.file)
    v = decide(p, scan_limit=args.scan_limit)
    if v.kind != "non-terminating":
        print(f"error: loop is {v.kind} ({v.label}); no witness trace", file=sys.stderr)
        return 2
    states = witness_trace(p, v, args.length, args.scan_limit)
    print(f"trace: {_ints(states)}")
    return 0


def _cmd_oracle(args) -> int:
    p = _read_loop(args.file)
    g = build_graph(p, args.bound)
    cyc = find_cycle(g)
    esc = find_escape(g, p, args.trace_cap)
    print("cycle: " + ("none" if cyc is None else _ints(cyc)))
    print("escape: " + ("none" if esc is None else _ints(esc)))
    if args.compare:
        v = decide(p, scan_limit=args.scan_limit)
        print(f"verdict: {v.kind} {v.label}")
        if cyc is not None and v.kind != "non-terminating":
            print("compare: mismatch (bounded graph has a cycle)")
            return 4
        print("compare: ok")
    return 0


# ---------------------------------------------------------------------------
# collatz commands
# ---------------------------------------------------------------------------


def _build_map(args):
    gen = getattr(args, "m_list", None) is not None or getattr(args, "r_list", None) is not None
    if gen:
        if args.m is not None or args.a is not None:
            raise ValueError("give either --m/--a or --m-list/--r-list, not both")
        if args.m_list is None or args.r_list is None:
            raise ValueError("--m-list and --r-list go together")
        return GenCollatz(args.d, tuple(args.m_list), tuple(args.r_list))
    if args.m is None or args.a is None:
        raise ValueError("need --m and --a (weak map) or --m-list and --r-list")
    return WeakCollatz(args.d, args.m, args.a)


def _cmd_orbit(args) -> int:
    res = orbit(_build_map(args), args.start, args.steps, args.abs_bound)
    print(f"orbit: {_ints(res.prefix)}")
    if res.outcome == "entered-cycle":
        print(f"outcome: entered-cycle first={res.first_index} period={res.period}")
    else:
        print(f"outcome: {res.outcome}")
    return 0


def _cmd_reach(args) -> int:
    t = WeakCollatz(args.d, args.m, args.a)
    res = reachability_scan(t, args.start, args.steps, args.abs_bound)
    print(f"orbit: {_ints(res.prefix)}")
    if res.outcome == "reached-target":
        print(f"outcome: reached-target k={res.k}")
    elif res.outcome == "entered-cycle":
        print(f"outcome: entered-cycle first={res.first_index} period={res.period}")
    else:
        print(f"outcome: {res.outcome}")
    return 0


def _cmd_hist(args) -> int:
    counts = residue_histogram(_build_map(args), args.start, args.steps, args.alpha)
    for r in sorted(counts):
        print(f"{r}: {counts[r]}")
    return 0


def _cmd_to_slc(args) -> int:
    t = WeakCollatz(args.d, args.m, args.a)
    p = to_slc(t, args.sign)
    if args.json:
        print(emit_json(p))
    else:
        sys.stdout.write(emit_text(p))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _int_list(text: str):
    return tuple(int(tok) for tok in text.split(","))


def _add_scan_limit(sp) -> None:
    sp.add_argument(
        "--scan-limit",
        type=int,
        default=DEFAULT_SCAN_LIMIT,
        help="max lattice columns to scan before giving up (default %(default)s)",
    )


def _add_weak_args(sp) -> None:
    sp.add_argument("--d", type=int, required=True, help="modulus")
    sp.add_argument("--m", type=int, help="weak-map multiplier")
    sp.add_argument("--a", type=int, help="weak-map offset")


def _add_gen_args(sp) -> None:
    sp.add_argument("--m-list", type=_int_list, help="comma-separated branch multipliers")
    sp.add_argument("--r-list", type=_int_list, help="comma-separated branch offsets")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slcterm",
        description="Termination analysis for one-variable linear-constraint loops.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("decide", help="run the full analysis on a loop file")
    sp.add_argument("file", help="loop file (text or JSON), or - for stdin")
    sp.add_argument("--assume-reachability", action="store_true",
                    help="treat conjecture-backed cases as terminating")
    sp.add_argument("--json", action="store_true", help="emit a JSON report")
    _add_scan_limit(sp)
    sp.set_defaults(func=_cmd_decide)

    sp = sub.add_parser("cycles", help="search for cycles of length 1 and 2")
    sp.add_argument("file", help="loop file, or - for stdin")
    _add_scan_limit(sp)
    sp.set_defaults(func=_cmd_cycles)

    sp = sub.add_parser("decompose", help="print the Minkowski-Weyl decomposition")
    sp.add_argument("file", help="loop file, or - for stdin")
    sp.set_defaults(func=_cmd_decompose)

    sp = sub.add_parser("witness", help="print a verified non-termination trace")
    sp.add_argument("file", help="loop file, or - for stdin")
    sp.add_argument("--length", type=int, required=True, help="number of states to emit")
    _add_scan_limit(sp)
    sp.set_defaults(func=_cmd_witness)

    sp = sub.add_parser("oracle", help="brute-force the loop on a bounded state window")
    sp.add_argument("file", help="loop file, or - for stdin")
    sp.add_argument("--bound", type=int, default=64, help="state window is [-B, B] (default %(default)s)")
    sp.add_argument("--trace-cap", type=int, default=1000,
                    help="max states in an escape trace (default %(default)s)")
    sp.add_argument("--compare", action="store_true",
                    help="also run the analyzer and cross-check; exit 4 on disagreement")
    _add_scan_limit(sp)
    sp.set_defaults(func=_cmd_oracle)

    cp = sub.add_parser("collatz", help="Collatz-style map utilities")
    csub = cp.add_subparsers(dest="subcommand", required=True)

    sp = csub.add_parser("orbit", help="iterate a map and report the outcome")
    _add_weak_args(sp)
    _add_gen_args(sp)
    sp.add_argument("--start", type=int, required=True)
    sp.add_argument("--steps", type=int, default=1000)
    sp.add_argument("--abs-bound", type=int, default=10**18)
    sp.set_defaults(func=_cmd_orbit)

    sp = csub.add_parser("reach", help="scan a weak-map orbit for an exact-division point")
    _add_weak_args(sp)
    sp.add_argument("--start", type=int, required=True)
    sp.add_argument("--steps", type=int, default=1000)
    sp.add_argument("--abs-bound", type=int, default=10**18)
    sp.set_defaults(func=_cmd_reach)

    sp = csub.add_parser("hist", help="residue histogram of an orbit mod d**alpha")
    _add_weak_args(sp)
    _add_gen_args(sp)
    sp.add_argument("--start", type=int, required=True)
    sp.add_argument("--steps", type=int, default=1000)
    sp.add_argument("--alpha", type=int, default=1)
    sp.set_defaults(func=_cmd_hist)

    sp = csub.add_parser("to-slc", help="encode a weak map's monotone restriction as a loop")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--sign", choices=("+", "-"), default="+",
                    help="positive or negative restriction (use --sign=-)")
    sp.add_argument("--json", action="store_true", help="emit the loop as JSON")
    sp.set_defaults(func=_cmd_to_slc)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScanLimitExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (LoopFormatError, SchemaMismatchError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
