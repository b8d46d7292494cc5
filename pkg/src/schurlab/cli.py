"""Command-line interface.

Exit codes: 0 when no check failed, 1 when some verdict failed, 2 on input
errors (unparseable catalogs, unknown groups, bad parameters).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog, checks, core, families, isoclinism, ncgraph, reports
from .errors import SchurlabError


def _read_entries(path: str, lenient: bool) -> list[catalog.CatalogEntry]:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if lenient:
        entries, _errors = catalog.parse_catalog_collecting(text, source=path)
        return entries
    return catalog.parse_catalog(text, source=path)


def _write_report(report: reports.Report, out_path: str | None) -> None:
    text = report.render()
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _find_group(entries, name: str) -> core.GroupTable:
    for entry in entries:
        if entry.name == name:
            if entry.resolved is None:
                raise SchurlabError(f"group {name!r} failed to resolve: {entry.error}")
            return entry.resolved
    raise SchurlabError(f"no group named {name!r} in the catalog")


def cmd_analyze(args) -> int:
    entries = _read_entries(args.input, lenient=True)
    if args.group:
        entries = [e for e in entries if e.name == args.group]
        if not entries:
            raise SchurlabError(f"no group named {args.group!r} in the catalog")
    report = reports.analyze(entries, jobs=args.jobs)
    _write_report(report, args.report)
    return report.exit_code


def cmd_verify(args) -> int:
    entries = _read_entries(args.input, lenient=True)
    tokens = args.check.split(",") if args.check else None
    report = reports.run_checks(entries, check_set=tokens, jobs=args.jobs)
    _write_report(report, args.report)
    return report.exit_code


def cmd_search_equality(args) -> int:
    entries = _read_entries(args.input, lenient=True)
    report = reports.search_equality(entries, jobs=args.jobs)
    _write_report(report, args.report)
    return report.exit_code


def cmd_construct(args) -> int:
    spec = families.FamilySpec(family=args.family, params=tuple(args.params))
    text = catalog.construct_cmd(spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_isoclinic(args) -> int:
    entries = _read_entries(args.input, lenient=False)
    G = _find_group(entries, args.g)
    H = _find_group(entries, args.h)
    result = isoclinism.are_isoclinic(G, H, budget=args.budget)
    print(f"{args.g} ~ {args.h}: {result.status}")
    if result.reason:
        print(f"  reason: {result.reason}")
    if result.witness is not None:
        print("  phi:", " ".join(str(int(v)) for v in result.witness.phi))
        print("  theta_domain:", " ".join(str(int(v)) for v in result.witness.theta_domain))
        print("  theta_image: ", " ".join(str(int(v)) for v in result.witness.theta_image))
    return 0 if result.status != isoclinism.BUDGET_EXCEEDED else 1


def cmd_graph(args) -> int:
    entries = _read_entries(args.input, lenient=False)
    G = _find_group(entries, args.group)
    restriction = None
    if args.restrict == "z2":
        restriction = core.second_center(G)
    graph = ncgraph.build_graph(G, restriction)
    print(f"group {args.group}: {graph.vertex_count} vertices, {graph.edge_count()} edges")
    if args.max_clique:
        result = ncgraph.max_clique(graph)
        tag = "exact" if result.complete else "budget_exceeded (best found)"
        labels = ", ".join(G.label(v) for v in result.witness)
        print(f"max clique: {result.size} [{tag}]")
        print(f"  witness: {labels}")
    if args.edges:
        with open(args.edges, "w", encoding="utf-8") as handle:
            for u, v in graph.edges():
                handle.write(f"{G.label(u)} {G.label(v)}\n")
        print(f"edge list written to {args.edges}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurlab",
        description="Finite-group bound verification over catalog files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-group invariant report")
    p.add_argument("--input", required=True)
    p.add_argument("--group", help="restrict to one group")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--report", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run theorem checkers over a catalog")
    p.add_argument("--input", required=True)
    p.add_argument("--check", help="comma list of " + ",".join(reports.CHECK_IDS) + " or all")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--report", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-equality", help="find equality cases of the central-quotient bound")
    p.add_argument("--input", required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--report", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_search_equality)

    p = sub.add_parser("construct", help="emit a family member as catalog text")
    p.add_argument("--family", required=True)
    p.add_argument("--params", nargs="*", default=[])
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("isoclinic", help="decide isoclinism of two catalog groups")
    p.add_argument("--input", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--budget", type=int, default=isoclinism.DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_isoclinic)

    p = sub.add_parser("graph", help="non-commuting graph of one catalog group")
    p.add_argument("--input", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--restrict", choices=["z2"], help="restrict vertices to the second center")
    p.add_argument("--max-clique", action="store_true")
    p.add_argument("--edges", help="write an edge list to this file")
    p.set_defaults(func=cmd_graph)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchurlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); not an input error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
