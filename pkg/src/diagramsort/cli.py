"""Command-line front end.

Subcommands: parse, compose, sort, stretch, check, census, count-sortable,
verify, render.  Exit code 0 on success, 1 on a domain error such as a
parse failure or order mismatch, 2 on a verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import (
    VerificationError,
    census_stretch_sortable,
    count_t_stack_sortable,
    is_sss_direct,
    is_sss_theorem,
)
from .core import compose, format_diagram, parse_diagram, to_dot
from .sorting import TraceEvent, sort_diagram, sort_diagram_traced
from .stretch import SetComposition, is_stretch_of_identity, stretch_map
from .verification import run_checks

__all__ = ["run", "main"]


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _format_nodes(nodes: Sequence[int]) -> str:
    tops = sorted(x for x in nodes if x > 0)
    bots = sorted(-x for x in nodes if x < 0)
    return "{" + ",".join([str(i) for i in tops] + [f"{i}'" for i in bots]) + "}"


def _trace_line(event: TraceEvent) -> str:
    chosen = "{" + ",".join(f"{i}'" for i in sorted(event.bottom)) + "}"
    groups = max((tag.group for tag in event.assignment.values() if tag.kind == "M"), default=0)
    columns = [("L", 0)] + [("M", j) for j in range(1, groups + 1)] + [("R", 0)]
    parts = [f"B={chosen}"]
    for kind, group in columns:
        blocks = [
            _format_nodes(tuple(block))
            for block, tag in event.assignment.items()
            if tag.kind == kind and tag.group == group
        ]
        label = kind if kind != "M" else f"M{group}"
        parts.append(f"{label}=[{','.join(blocks)}]")
    return " ".join(parts)


def _parse_order_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise ValueError("empty order range")
    else:
        lo = hi = int(text)
    if lo < 0:
        raise ValueError("orders must be nonnegative")
    return list(range(lo, hi + 1))


def _cmd_parse(args: argparse.Namespace) -> int:
    print(format_diagram(parse_diagram(args.diagram, args.order)))
    return 0


def _cmd_compose(args: argparse.Namespace) -> int:
    d1 = parse_diagram(args.first, args.order)
    d2 = parse_diagram(args.second, args.order)
    product, middle = compose(d1, d2)
    print(format_diagram(product))
    print(f"l={middle}")
    return 0


def _cmd_sort(args: argparse.Namespace) -> int:
    diagram = parse_diagram(args.diagram, args.order)
    if args.trace:
        result, trace = sort_diagram_traced(diagram)
        for event in trace:
            print(_trace_line(event))
    else:
        result = sort_diagram(diagram)
    print(format_diagram(result))
    return 0


def _cmd_stretch(args: argparse.Namespace) -> int:
    alpha = SetComposition.parse(args.alpha)
    diagram = parse_diagram(args.diagram, args.order)
    print(format_diagram(stretch_map(alpha, args.k, diagram)))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    diagram = parse_diagram(args.diagram, args.order)
    direct = is_sss_direct(diagram)
    structural = is_sss_theorem(diagram)
    print(f"propagating_blocks={diagram.propagation_number()}")
    print(f"stretch_of_identity={str(is_stretch_of_identity(diagram)).lower()}")
    print(f"sortable_direct={str(direct).lower()}")
    print(f"sortable_structural={str(structural).lower()}")
    if direct != structural:
        raise VerificationError(f"predicates disagree on {format_diagram(diagram)}")
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    orders = _parse_order_range(args.n)
    if args.deep and max(orders) < 5:
        orders.extend(range(max(orders) + 1, 6))
    print("# sortable counts are computed, not from paper", file=sys.stderr)
    for n in orders:
        row = census_stretch_sortable(n, check=args.check, jobs=args.jobs)
        millis = round(row.elapsed * 1000)
        if args.json:
            print(json.dumps({"n": row.n, "total": row.total, "sortable": row.sortable, "millis": millis}))
        else:
            print(f"{row.n}\t{row.total}\t{row.sortable}\t{millis}")
    return 0


def _cmd_count_sortable(args: argparse.Namespace) -> int:
    print(count_t_stack_sortable(args.n, args.t))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks(deep=args.deep, seed=args.seed)
    failed = 0
    for res in results:
        if res.ok:
            print(f"ok   {res.name}: {res.detail} ({res.seconds:.2f}s)")
        else:
            failed += 1
            print(f"FAIL {res.name}: {res.detail} ({res.seconds:.2f}s)")
    if failed:
        print(f"{failed} of {len(results)} checks failed", file=sys.stderr)
        return 2
    print(f"all {len(results)} checks passed")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    print(to_dot(parse_diagram(args.diagram, args.order)), end="")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="diagramsort", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def with_diagram(p: _Parser) -> None:
        p.add_argument("--order", type=int, required=True, help="diagram order n")
        p.add_argument("diagram", help="diagram text, e.g. \"{1,4|2,3,4',5'}\"")

    p = sub.add_parser("parse", help="canonicalize a diagram and print its text form")
    with_diagram(p)
    p.set_defaults(handler=_cmd_parse)

    p = sub.add_parser("compose", help="monoid product of two diagrams plus the middle count")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("sort", help="stack-sorting image of a diagram")
    with_diagram(p)
    p.add_argument("--trace", action="store_true", help="print one line per split step")
    p.set_defaults(handler=_cmd_sort)

    p = sub.add_parser("stretch", help="apply a stretch morphism to a diagram")
    p.add_argument("--alpha", required=True, help='set composition, e.g. "1,2|3|5,6,7|4"')
    p.add_argument("--k", type=int, required=True, help="target order")
    with_diagram(p)
    p.set_defaults(handler=_cmd_stretch)

    p = sub.add_parser("check", help="sortability predicates for one diagram")
    with_diagram(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("census", help="count stretch-stack-sortable diagrams per order")
    p.add_argument("--n", default="1..4", help="order or range, e.g. 4 or 1..4")
    p.add_argument("--check", action="store_true", help="compare both predicates on every diagram")
    p.add_argument("--deep", action="store_true", help="extend the range through order 5")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--json", action="store_true", help="one JSON object per row instead of TSV")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("count-sortable", help="count t-stack-sortable permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.set_defaults(handler=_cmd_count_sortable)

    p = sub.add_parser("verify", help="run the whole invariant suite")
    p.add_argument("--deep", action="store_true", help="extend exhaustive scans through order 5")
    p.add_argument("--seed", type=int, default=2024, help="seed for the sampled properties")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("render", help="emit Graphviz DOT for a diagram")
    with_diagram(p)
    p.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    p.set_defaults(handler=_cmd_render)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Entry point returning the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())
