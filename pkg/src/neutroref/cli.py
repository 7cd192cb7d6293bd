"""Command-line interface.

Subcommands: ``similarity`` (two set files), ``rank`` (problem file),
``consistency`` (interval problem file), ``ops`` (set algebra on set
files). Reports go to stdout as a human table or as JSON (``--format``);
human tables round scores to 5 decimals, JSON carries full precision.
Exit codes: 0 success, 1 data/validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import algebra
from .consistency import DEFAULT_CANDIDATES, Objective, select_measure
from .decision import Polarity, rank
from .documents import (
    consistency_document,
    parse_problem,
    parse_set,
    ranking_document,
    set_document,
)
from .errors import NeutrorefError, WeightError
from .model import Flavor, Measure, RefinedSet
from .similarity import similarity


def _measure_arg(value: str) -> Measure:
    try:
        return Measure(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown measure {value!r} (choose from jaccard, dice, cosine)"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neutroref",
        description="Similarity, ranking, and consistency analysis for refined sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("table", "json"), default="table",
            help="report format (default: table)",
        )

    p_sim = sub.add_parser("similarity", help="similarity between two set files")
    p_sim.add_argument("--measure", type=_measure_arg, required=True)
    p_sim.add_argument("--weighted", action="store_true",
                       help="use the weights declared in the set documents")
    add_format(p_sim)
    p_sim.add_argument("set_a", type=Path)
    p_sim.add_argument("set_b", type=Path)
    p_sim.set_defaults(func=_cmd_similarity)

    p_rank = sub.add_parser("rank", help="rank a problem's alternatives against the ideal")
    p_rank.add_argument("--measure", type=_measure_arg, required=True)
    p_rank.add_argument("--weighted", action="store_true",
                        help="weight criteria by the problem's criterion weights")
    p_rank.add_argument("--polarity", choices=("positive", "negative"), default="positive",
                        help="ideal to rank against (default: positive)")
    add_format(p_rank)
    p_rank.add_argument("problem", type=Path)
    p_rank.set_defaults(func=_cmd_rank)

    p_con = sub.add_parser("consistency",
                           help="consistency degrees of all measures over an interval problem")
    p_con.add_argument("--objective", choices=("maximize", "minimize"), default="maximize",
                       help="selection objective (default: maximize)")
    add_format(p_con)
    p_con.add_argument("problem", type=Path)
    p_con.set_defaults(func=_cmd_consistency)

    p_ops = sub.add_parser("ops", help="set algebra on set files")
    p_ops.add_argument("operation", choices=("union", "intersection", "complement", "subset"))
    add_format(p_ops)
    p_ops.add_argument("set_a", type=Path)
    p_ops.add_argument("set_b", type=Path, nargs="?")
    p_ops.set_defaults(func=_cmd_ops)

    return parser


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _render_set(s: RefinedSet) -> str:
    def fmt_seq(seq) -> str:
        if s.flavor is Flavor.SVNR:
            return "(" + ", ".join(f"{v:g}" for v in seq) + ")"
        return "(" + ", ".join(f"[{v.lo:g}, {v.hi:g}]" for v in seq) + ")"

    lines = [f"{'label':<12}{'truth':<28}{'indet':<28}falsity"]
    for label, el in zip(s.universe, s.elements):
        lines.append(
            f"{label:<12}{fmt_seq(el.truth):<28}{fmt_seq(el.indet):<28}{fmt_seq(el.falsity)}"
        )
    return "\n".join(lines)


def _cmd_similarity(args) -> int:
    set_a, weights_a = parse_set(args.set_a.read_text(encoding="utf-8"))
    set_b, weights_b = parse_set(args.set_b.read_text(encoding="utf-8"))
    weights = None
    if args.weighted:
        if weights_a is not None and weights_b is not None:
            if weights_a.values != weights_b.values:
                raise WeightError("set documents declare different weights")
        weights = weights_a if weights_a is not None else weights_b
        if weights is None:
            raise WeightError("--weighted given but neither set document declares weights")
    score = similarity(args.measure, set_a, set_b, weights)
    if args.format == "json":
        _emit({
            "measure": score.measure.value,
            "weighted": score.weighted,
            "score": score.value,
        })
    else:
        print(f"measure   {score.measure.value}")
        print(f"weighted  {'yes' if score.weighted else 'no'}")
        print(f"score     {score.value:.5f}")
    return 0


def _cmd_rank(args) -> int:
    problem = parse_problem(args.problem.read_text(encoding="utf-8"))
    report = rank(problem, args.measure, weighted=args.weighted,
                  polarity=Polarity(args.polarity))
    if args.format == "json":
        _emit(ranking_document(report))
    else:
        print(f"measure   {report.measure.value}")
        print(f"weighted  {'yes' if report.weighted else 'no'}")
        print(f"polarity  {report.polarity.value}")
        print(f"{'alternative':<14}score")
        for label, score in zip(report.alternatives, report.scores):
            print(f"{label:<14}{score.value:.5f}")
        print("ranking   " + " > ".join(report.order))
    return 0


def _cmd_consistency(args) -> int:
    problem = parse_problem(args.problem.read_text(encoding="utf-8"))
    selected, report = select_measure(
        problem, DEFAULT_CANDIDATES, Objective(args.objective)
    )
    if args.format == "json":
        _emit(consistency_document(report))
    else:
        print(f"{'measure':<10}{'weighted':<10}degree")
        for row in report.rows:
            print(f"{row.measure.value:<10}{'yes' if row.weighted else 'no':<10}{row.degree:.5f}")
        suffix = " (weighted)" if selected[1] else ""
        print(f"selected: {selected[0].value}{suffix}")
    return 0


def _cmd_ops(args) -> int:
    needs_two = args.operation != "complement"
    if needs_two and args.set_b is None:
        print(f"error: ops {args.operation} needs two set files", file=sys.stderr)
        return 2
    if not needs_two and args.set_b is not None:
        print("error: ops complement takes a single set file", file=sys.stderr)
        return 2
    set_a, _ = parse_set(args.set_a.read_text(encoding="utf-8"))
    set_b = None
    if needs_two:
        set_b, _ = parse_set(args.set_b.read_text(encoding="utf-8"))
    if args.operation == "subset":
        result = algebra.svnr_subset(set_a, set_b)
        if args.format == "json":
            _emit({"operation": "subset", "result": result})
        else:
            print("true" if result else "false")
        return 0
    if args.operation == "union":
        out = algebra.svnr_union(set_a, set_b)
    elif args.operation == "intersection":
        out = algebra.svnr_intersection(set_a, set_b)
    else:
        out = algebra.svnr_complement(set_a)
    if args.format == "json":
        _emit(set_document(out))
    else:
        print(_render_set(out))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except NeutrorefError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
