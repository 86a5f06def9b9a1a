"""``indom`` command line: solve graphs, run the verification sweeps, emit families."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from . import families
from .graph import GraphError, SubcubicGraph
from .graph6 import ParseError, read_graphs, write_graphs
from .recognition import weight_report
from .sweeps import (
    cmd_verify_cubic,
    cmd_verify_dorbec,
    cmd_verify_props,
    cmd_verify_subcubic,
    default_jobs,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _dump(obj: Any, out: str | None, as_json: bool, summary: str) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if as_json or not out:
        print(text if as_json else summary)


# -- solve ------------------------------------------------------------------


def cmd_solve(path: str | None, fmt: str = "g6") -> list[dict[str, Any]]:
    """Weight reports for every graph in ``path`` (``None`` or ``-`` reads stdin)."""
    if path in (None, "-"):
        graphs = list(read_graphs(sys.stdin, fmt))
    else:
        with open(path, encoding="utf-8") as fh:
            graphs = list(read_graphs(fh, fmt))
    if not graphs:
        raise ParseError("no graphs in input")
    return [weight_report(G).to_json() for G in graphs]


# -- gen --------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> list[SubcubicGraph]:
    kind = args.family
    if kind == "bad":
        if args.attachments is not None:
            att = tuple(int(x) for x in args.attachments.split(",") if x != "")
            spec = families.BadGraphSpec(args.k, att)
        else:
            spec = families.random_bad_spec(args.k, random.Random(args.seed))
        return [families.build_bad(spec).graph]
    if kind == "troublesome":
        spec = families.random_bad_spec(args.k, random.Random(args.seed), root_degree=1)
        return [families.build_troublesome(args.type, spec).graph]
    if kind == "example":
        return [families.example_graph(args.name)]
    if kind == "extremal":
        return [families.extremal_family(args.name, args.blocks)]
    if kind == "named":
        if args.name == "prism":
            return [families.prism(args.m)]
        if args.name not in families.NAMED:
            raise families.InvalidSpec(f"unknown graph {args.name!r}")
        return [families.NAMED[args.name]()]
    if kind == "cubic":
        from .enumerate import enumerate_cubic

        return list(enumerate_cubic(args.n))
    if kind == "subcubic":
        from .enumerate import enumerate_subcubic_connected

        return list(enumerate_subcubic_connected(args.n))
    raise families.InvalidSpec(f"unknown family {kind!r}")


# -- argument parsing -------------------------------------------------------


def _common(p: argparse.ArgumentParser, sweep: bool = True) -> None:
    p.add_argument("--out", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    if sweep:
        p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all available)")
        p.add_argument("--shard", metavar="I/K", help="only check graphs whose index is I mod K")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="weight report (i, gamma, w, Theta, Omega) for input graphs")
    p.add_argument("input", nargs="?", default="-", help="file with graphs (default stdin)")
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    _common(p, sweep=False)

    p = sub.add_parser("verify-cubic", help="3n/8, gamma and 2n/5 bounds on connected cubic graphs")
    p.add_argument("--max-n", type=int, default=14)
    _common(p)

    p = sub.add_parser("verify-subcubic", help="8i <= Omega on connected subcubic graphs")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--allow-10", action="store_true", help="permit --max-n 10")
    _common(p)

    p = sub.add_parser("verify-dorbec", help="8i <= w on K23-free connected subcubic graphs")
    p.add_argument("--max-n", type=int, default=10)
    _common(p)

    p = sub.add_parser("verify-props", help="randomised property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    _common(p, sweep=False)

    p = sub.add_parser("gen", help="emit a family member or an enumeration")
    p.add_argument("family", choices=("bad", "troublesome", "example", "extremal", "named", "cubic", "subcubic"))
    p.add_argument("name", nargs="?", help="example / extremal / named graph name")
    p.add_argument("--k", type=int, default=1, help="unit count for bad graphs and templates")
    p.add_argument("--attachments", help="comma-separated attachment targets for a bad graph")
    p.add_argument("--type", type=int, choices=(1, 2), default=2, help="troublesome template type")
    p.add_argument("--blocks", type=int, default=2)
    p.add_argument("--m", type=int, default=5, help="cycle length for the prism")
    p.add_argument("--n", type=int, default=4, help="order for enumerations")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.add_argument("--out", metavar="PATH")
    return parser


def _sweep_summary(report: dict[str, Any]) -> str:
    lines = []
    parts = report.get("reports", [report])
    for r in parts:
        lines.append(
            f"{r['theorem']}: checked {r['checked']}, violations {len(r['violations'])}, "
            f"unexpected {r['unexpected']}, equality cases {len(r['equality'])}"
        )
    lines.append("OK" if report["ok"] else "FAILED")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            reports = cmd_solve(args.input, args.format)
            obj: Any = reports[0] if len(reports) == 1 else reports
            text = json.dumps(obj, indent=2, sort_keys=True)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text + "\n")
            print(text)
            return EXIT_OK
        if args.command == "gen":
            graphs = cmd_gen(args)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    write_graphs(graphs, fh, args.format)
            else:
                write_graphs(graphs, sys.stdout, args.format)
            return EXIT_OK
        if args.command == "verify-props":
            report = cmd_verify_props(args.trials, args.seed)
            summary = "\n".join(f"{s['suite']}: {s['trials']} trials, {s['failures']} failures" for s in report["suites"])
            summary += "\n" + ("OK" if report["ok"] else "FAILED")
            _dump(report, args.out, args.json, summary)
            return EXIT_OK if report["ok"] else EXIT_VIOLATION
        jobs = args.jobs if args.jobs is not None else default_jobs()
        if args.command == "verify-cubic":
            report = cmd_verify_cubic(args.max_n, jobs=jobs, shard=args.shard)
        elif args.command == "verify-subcubic":
            report = cmd_verify_subcubic(args.max_n, jobs=jobs, allow_ten=args.allow_10, shard=args.shard)
        else:
            report = cmd_verify_dorbec(args.max_n, jobs=jobs, shard=args.shard)
        _dump(report, args.out, args.json, _sweep_summary(report))
        return EXIT_OK if report["ok"] else EXIT_VIOLATION
    except (GraphError, ValueError, KeyError, OSError) as exc:
        print(f"indom: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except families.ReconstructionFailure as exc:
        print(f"indom: error: ReconstructionFailure: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
