"""Command-line front end.

Subcommands: `rigid` lists maximal rigid objects, `endo` emits the quiver
bundle of a chosen object, `verify` runs the verification suite. Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from tubecat import __version__, kernel
from tubecat.endo import bundle_dot, bundle_json
from tubecat.quiver import to_dot
from tubecat.rigid import (
    enumerate_maximal_rigid,
    from_tilting,
    tilting_intervals,
)
from tubecat.verify import CHECK_NAMES, run_suite

DEFAULT_MAX_RANK = 7


def max_rank() -> int:
    value = os.environ.get("TUBECAT_MAX_RANK")
    return int(value) if value else DEFAULT_MAX_RANK


def parse_rank_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    return lo, hi


def parse_tilting(text: str) -> list[tuple[int, int]]:
    out = []
    for piece in text.split(","):
        lo_text, _, hi_text = piece.strip().partition("-")
        if not hi_text:
            raise ValueError(f"bad interval {piece!r}; expected like 1-3")
        out.append((int(lo_text), int(hi_text)))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tubecat",
        description="Maximal rigid objects in cluster tubes and their algebras.",
    )
    parser.add_argument("--version", action="version", version=f"tubecat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rigid = sub.add_parser("rigid", help="enumerate maximal rigid objects")
    p_rigid.add_argument("--rank", required=True, type=int)
    p_rigid.add_argument("--count", action="store_true", help="print only the tally")
    p_rigid.add_argument("--format", choices=("table", "json"), default="table")

    p_endo = sub.add_parser("endo", help="emit the quiver bundle of one object")
    p_endo.add_argument("--rank", required=True, type=int)
    p_endo.add_argument("--top", required=True, type=int, help="orbit of the top summand")
    p_endo.add_argument(
        "--tilting",
        required=True,
        help="comma-separated wing intervals for all summands, e.g. 1-3,1-1,3-3",
    )
    p_endo.add_argument("--format", choices=("json", "dot", "table"), default="table")
    p_endo.add_argument("--out", type=Path, help="directory for .dot files")

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--rank", required=True, help="rank or range, e.g. 3 or 2..5")
    p_verify.add_argument("--only", choices=CHECK_NAMES)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--ql-cap", type=int, help="quasilength cap for sweeps")
    p_verify.add_argument("--seed", type=int, default=0)

    return parser


def _check_rank(parser: argparse.ArgumentParser, rank: int):
    if rank < 2:
        parser.error(f"rank must be >= 2, got {rank}")
    if rank > max_rank():
        parser.error(
            f"rank {rank} exceeds the cap {max_rank()}; set TUBECAT_MAX_RANK to raise it"
        )


def cmd_rigid(parser, args) -> int:
    _check_rank(parser, args.rank)
    objects = enumerate_maximal_rigid(args.rank)
    if args.count:
        print(len(objects))
        return 0
    if args.format == "json":
        payload = []
        for t in objects:
            record = t.to_json()
            record["tilting_intervals"] = [f"{lo}-{hi}" for lo, hi in tilting_intervals(t)]
            payload.append(record)
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    for t in objects:
        intervals = ",".join(f"{lo}-{hi}" for lo, hi in tilting_intervals(t))
        print(f"top={t.top} summands={t} intervals={intervals}")
    return 0


def cmd_endo(parser, args) -> int:
    _check_rank(parser, args.rank)
    try:
        intervals = parse_tilting(args.tilting)
        t = from_tilting(args.rank, args.top, intervals)
    except ValueError as exc:
        parser.error(str(exc))
    data = bundle_json(t)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        for name, text in bundle_dot(t).items():
            (args.out / f"{name}.dot").write_text(text)
        print(f"wrote 3 dot files to {args.out}")
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    elif args.format == "dot":
        for name, text in bundle_dot(t).items():
            print(f"// {name}")
            print(text)
    else:
        print(f"object {t} (intervals {args.tilting}, top orbit {args.top})")
        for name in ("tilted", "cluster_tilted", "endomorphism"):
            pres = data[name]
            print(
                f"  {name}: {len(pres['vertices'])} vertices, "
                f"{len(pres['arrows'])} arrows, {len(pres['relations'])} relations"
            )
    return 0


def cmd_verify(parser, args) -> int:
    lo, hi = parse_rank_range(args.rank)
    if lo > hi:
        parser.error(f"empty rank range {args.rank}")
    for n in (lo, hi):
        _check_rank(parser, n)
    report = run_suite(range(lo, hi + 1), args.only, args.ql_cap, args.seed)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        for outcome in report.outcomes:
            print(outcome.line())
        status = "all checks passed" if report.ok else "FAILURES present"
        print(f"{status} ({len(report.outcomes)} outcomes, backend={kernel.BACKEND})")
    return 0 if report.ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "rigid":
            return cmd_rigid(parser, args)
        if args.command == "endo":
            return cmd_endo(parser, args)
        if args.command == "verify":
            return cmd_verify(parser, args)
    except ValueError as exc:
        parser.error(str(exc))
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
