"""Command-line front end.

Exit codes: 0 success, 1 a verification claim failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import diatonic, hexatonic, smoothness, suites
from .triads import parse_triad

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GROUPS = {
    "PL": hexatonic.pl_group,
    "TI": hexatonic.ti_group,
    "PLR": hexatonic.plr_group,
    "H": hexatonic.hex_ti_stabilizer,
}


class UsageError(Exception):
    pass


def cmd_verify(args) -> int:
    report = suites.run_suite(args.suite)
    sys.stdout.write(report.to_text())
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n", encoding="utf-8")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_enumerate_msc(args) -> int:
    summaries = smoothness.classify_all(args.cardinality)
    print(f"{'prime':<28} {'card':>4} {'exemplars':>9} {'cycles':>6}  lengths")
    for s in summaries:
        r = s.row()
        prime = "{" + ",".join(map(str, r["prime"])) + "}"
        lengths = ",".join(map(str, r["cycle_lengths"]))
        print(f"{prime:<28} {r['cardinality']:>4} {r['exemplars']:>9} {r['cycles']:>6}  {lengths}")
    if args.csv:
        Path(args.csv).write_text(smoothness.to_csv(summaries), encoding="utf-8")
    return EXIT_OK


def cmd_orbit(args) -> int:
    try:
        seed = parse_triad(args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None
    g = GROUPS[args.group]()
    if args.group == "PL":
        # cycle order: alternate P and L away from the seed
        chords = hexatonic.alternating_prefixes(seed)[:-1]
        words, w = [], ""
        for k in range(len(chords)):
            words.append(hexatonic.reduce_word(w) or "Id")
            w = "PL"[k % 2] + w
        for word, t in zip(words, chords):
            print(f"{word:<8} {t.name}")
        return EXIT_OK
    seen = {}
    for p in g:
        label = hexatonic.ti_name(p) if args.group in ("TI", "H") else (p.label or "Id")
        seen.setdefault(p(seed), label)
    for t in sorted(seen, key=lambda t: t.index):
        print(f"{seen[t]:<8} {t.name}")
    return EXIT_OK


def cmd_dot(args) -> int:
    name = args.network.strip().lower()
    if name == "grail":
        sys.stdout.write(hexatonic.grail_dot())
        return EXIT_OK
    m = re.fullmatch(r"hexcycle[\s_:]*(\d+)", name)
    if not m:
        raise UsageError(f"unknown network {args.network!r}")
    i = int(m.group(1))
    if not 0 <= i <= 3:
        raise UsageError(f"hexatonic cycle index must be in 0..3, got {i}")
    sys.stdout.write(hexatonic.pl_network_dot(i))
    return EXIT_OK


def cmd_table(args) -> int:
    print(f"{'k':<4} {'kHex':<28} kHk^-1")
    ok = True
    for row in hexatonic.sub_dual_table():
        hexes = "{" + ",".join(t.name for t in row.hex_set) + "}"
        dual = "{" + ",".join(row.dual_group) + "}"
        print(f"{row.k:<4} {hexes:<28} {dual}  {'dual' if row.dual else 'NOT DUAL'}")
        ok &= row.dual
    return EXIT_OK if ok else EXIT_FAIL


def cmd_diatonic(args) -> int:
    cycle = hexatonic.hex_cycle(args.cycle)
    if args.douthett:
        check = diatonic.douthett_sequence_check(cycle)
        for triad, scale, ok in check.pairs:
            print(f"{triad:<4} in {scale:<10} {'yes' if ok else 'no'}")
        print("root steps:", " ".join(str(s - 12) for s in check.root_steps))
        return EXIT_OK if check.holds else EXIT_FAIL
    if args.chains:
        try:
            chains = diatonic.covering_chains(cycle, args.length)
        except ValueError as e:
            raise UsageError(str(e)) from None
        for chain in chains:
            print(f"{str(chain):<16} covers {' '.join(t.name for t in chain.triads)}")
        return EXIT_OK
    for row in diatonic.containment_table(cycle):
        marked = [s + ("*" if s in row["p_move"] else "") for s in row["scales"]]
        print(f"{row['triad']:<4} {'  '.join(marked)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hexdual", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=suites.SUITES)
    p.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate-msc", help="set classes supporting maximally smooth cycles")
    p.add_argument("--cardinality", type=int)
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_enumerate_msc)

    p = sub.add_parser("orbit", help="orbit of a triad under PL, TI, PLR or H")
    p.add_argument("--group", required=True, choices=sorted(GROUPS))
    p.add_argument("--seed", required=True)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("dot", help="PL-network as a DOT digraph")
    p.add_argument("--network", required=True, help="hexcycle0..hexcycle3 or grail")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("table", help="hexatonic dual groups by conjugation")
    p.add_argument("--sub-dual", action="store_true", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("diatonic", help="major-scale containment of a hexatonic cycle")
    p.add_argument("--cycle", type=int, default=0, choices=range(4))
    p.add_argument("--length", type=int, default=4)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--chains", action="store_true")
    mode.add_argument("--douthett", action="store_true")
    p.set_defaults(func=cmd_diatonic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"hexdual: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
