"""Command-line front end.

Exit codes: 0 success (an empty spectrum is an answer), 1 verification
failures, 2 input/domain errors, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import graph as gr
from . import spectrum as sp
from . import verify
from .abelian import GroupSpecError, format_element, parse_group
from .graph import GraphError
from .graphio import format_edge_list, parse_graph, write_edge_list

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def _warn_disconnected(G):
    if not gr.is_connected(G):
        print("warning: graph is disconnected; one constant is required across all components",
              file=sys.stderr)


def _print_result(result: sp.SpectrumResult, args) -> None:
    if args.format == "json":
        print(_dump(result.to_dict(witnesses=args.witnesses)))
        return
    constants = " ".join(format_element(c) for c in result.constants) or "(none)"
    print(f"group: {result.group}")
    print(f"constants: {constants}")
    print(f"is_subgroup: {str(result.is_subgroup).lower()}")
    print(f"method: {result.method}")
    print(f"labelings_examined: {result.labelings_examined}")
    if args.witnesses:
        for c in result.constants:
            lab = result.witnesses.get(c)
            if lab is not None:
                print(f"witness {format_element(c)}: " + " ".join(format_element(x) for x in lab))


def cmd_spec(args) -> int:
    G = parse_graph(args.graph)
    A = parse_group(args.group)
    strategy = "reduced" if args.command == "redspec" else args.strategy
    result = sp.spectrum(G, A, strategy, budget=args.budget, jobs=args.jobs)
    _warn_disconnected(G)
    _print_result(result, args)
    return EXIT_OK


def cmd_closed_form(args) -> int:
    A = parse_group(args.group)
    family = args.family
    if family == "cycle":
        if args.n is None:
            raise GraphError("--n is required for the cycle family")
        result = sp.cycle_spectrum(args.n, A)
    elif family == "kpartite":
        if args.sizes is None:
            raise GraphError("--sizes is required for the kpartite family")
        result = sp.complete_multipartite_spectrum(args.sizes, A)
    elif family == "corona":
        if args.sizes is None or args.graph is None:
            raise GraphError("--graph (the base H) and --sizes are required for the corona family")
        result = sp.corona_spectrum(parse_graph(args.graph), args.sizes, A)
    elif family == "z2":
        if args.graph is None:
            raise GraphError("--graph is required for the z2 family")
        if A.moduli != (2,):
            raise GroupSpecError("the z2 family is defined over Z2 only")
        result = sp.z2_spectrum(parse_graph(args.graph))
    else:  # pathjoin
        if args.sizes is None:
            raise GraphError("--sizes is required for the pathjoin family")
        contains = sp.path_join_contains_zero(len(args.sizes), args.sizes, A)
        doc = {"group": str(A), "sizes": args.sizes, "contains_zero": contains}
        if contains and args.witnesses:
            lab = sp.path_join_zero_labeling(args.sizes, A)
            doc["witness"] = {str(v): format_element(x) for v, x in enumerate(lab)}
        if args.format == "json":
            print(_dump(doc))
        else:
            print(f"group: {A}")
            print(f"contains_zero: {str(contains).lower()}")
        return EXIT_OK
    _print_result(result, args)
    return EXIT_OK


def cmd_construct(args) -> int:
    G = parse_graph(args.expression)
    if args.output:
        write_edge_list(G, args.output)
        print(f"vertices: {G.n}")
        print(f"edges: {G.edge_count}")
    else:
        sys.stdout.write(format_edge_list(G))
        print(f"vertices: {G.n} edges: {G.edge_count}", file=sys.stderr)
    return EXIT_OK


def cmd_reduce(args) -> int:
    G = parse_graph(args.graph)
    red = gr.twin_classes(G)
    doc = {
        "classes": [list(block) for block in red.classes],
        "multiplicities": red.multiplicities,
        "quotient": {"n": red.quotient.n, "edges": [list(e) for e in red.quotient.edges]},
    }
    if args.format == "json":
        print(_dump(doc))
    else:
        for i, block in enumerate(red.classes):
            print(f"class {i}: {' '.join(map(str, block))}")
        print("multiplicities: " + " ".join(map(str, red.multiplicities)))
        print("quotient:")
        sys.stdout.write(format_edge_list(red.quotient))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials > 0 and args.seed is None:
        print("error: --seed is required when --trials > 0", file=sys.stderr)
        return EXIT_DOMAIN
    if args.suite != "all" and args.suite not in verify.SUITES:
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return EXIT_DOMAIN
    report = verify.run_suite(args.suite, args.trials, args.seed or 0, jobs=args.jobs)
    if args.format == "json":
        print(_dump(report.to_dict()))
    else:
        for part in report.suites or [report]:
            status = "PASS" if part.passed else "FAIL"
            print(f"{status} {part.name}: {part.cases} cases, {part.skipped} skipped, "
                  f"{len(part.failures)} failures")
        for f in report.failures:
            print(f"  failure: {f}")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupmagic", description="Group magic spectra of graphs over finite abelian groups."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    for name in ("spec", "redspec"):
        p = sub.add_parser(name, help="compute the spectrum of a graph")
        p.add_argument("--graph", required=True, help="constructor atom, edge-list file, or expression")
        p.add_argument("--group", required=True, help="e.g. Z5, V4, Z2xZ3")
        if name == "spec":
            p.add_argument("--strategy", choices=("auto", "brute", "reduced"), default="auto")
        p.add_argument("--budget", type=int, default=sp.DEFAULT_BUDGET)
        p.add_argument("--witnesses", action="store_true")
        p.add_argument("--jobs", type=int, default=1)
        output_flags(p)
        p.set_defaults(func=cmd_spec)

    p = sub.add_parser("closed-form", help="evaluate a closed-form spectrum")
    p.add_argument("--family", required=True, choices=("cycle", "kpartite", "corona", "z2", "pathjoin"))
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--sizes", type=_int_list)
    p.add_argument("--graph")
    p.add_argument("--witnesses", action="store_true")
    output_flags(p)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("construct", help="build a graph and write it as an edge list")
    p.add_argument("expression")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("reduce", help="twin classes and the reduced graph")
    p.add_argument("--graph", required=True)
    output_flags(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run theorem-verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --suite all")
    output_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except sp.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (sp.DomainError, GraphError, GroupSpecError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
