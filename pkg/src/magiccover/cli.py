"""Command-line front end: construct families, emit labelings, verify, search, export."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import families, labelings
from .errors import MagicCoverError
from .graph import Graph, TotalLabeling, graph_from_json, labels_from_json
from .isocover import DEFAULT_MAX_COPIES, DEFAULT_MAX_PATTERN_VERTICES
from .search import Count, Exhausted, NoSolution, SearchOptions, Solution, search_supermagic
from .verify import verify_supermagic

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_graph(path: str) -> Graph:
    data = _load_json(path)
    return graph_from_json(data["graph"] if "graph" in data else data)


def _load_labeling(graph: Graph, path: str) -> TotalLabeling:
    return labels_from_json(graph, _load_json(path))


def _resolve_pattern(ref: str) -> Graph:
    if ref.startswith("family:"):
        g, _ = families.construct_family(
            families.parse_family_spec(ref[len("family:"):]), _load_graph
        )
        return g
    name = ref.partition(":")[0]
    if name in families._FAMILY_PARAMS and not os.path.exists(ref):
        g, _ = families.construct_family(families.parse_family_spec(ref), _load_graph)
        return g
    return _load_graph(ref)


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dot(graph: Graph, labeling: Optional[TotalLabeling]) -> str:
    lines = ["graph G {"]
    for v in graph.vertices:
        if labeling is not None:
            lines.append(f'  "{v}" [label="{v} [{labeling[v]}]"];')
        else:
            lines.append(f'  "{v}";')
    for e in graph.edges:
        if labeling is not None:
            lines.append(f'  "{e[0]}" -- "{e[1]}" [label="{labeling[e]}"];')
        else:
            lines.append(f'  "{e[0]}" -- "{e[1]}";')
    lines.append("}")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magiccover",
        description="Construct graph families, build supermagic labelings, "
        "verify them from first principles, or search for labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family graph and emit its JSON")
    p.add_argument("--family", required=True)
    p.add_argument("--out")

    p = sub.add_parser("label", help="build a family and its constructed labeling")
    p.add_argument("--family", required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="certify a labeling as pattern-supermagic")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--text", action="store_true")
    p.add_argument("--max-pattern-vertices", type=int, default=DEFAULT_MAX_PATTERN_VERTICES)
    p.add_argument("--max-copies", type=int, default=DEFAULT_MAX_COPIES)

    p = sub.add_parser("search", help="backtracking search for a supermagic labeling")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--target", type=int)
    p.add_argument("--node-limit", type=int, default=10_000_000)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-pattern-vertices", type=int, default=DEFAULT_MAX_PATTERN_VERTICES)
    p.add_argument("--max-copies", type=int, default=DEFAULT_MAX_COPIES)

    p = sub.add_parser("export", help="export a graph (optionally labeled) as DOT or JSON")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling")
    p.add_argument("--format", choices=["dot", "json"], required=True)
    p.add_argument("--out")
    return parser


def _cmd_construct(args) -> int:
    graph, _ = families.construct_family(
        families.parse_family_spec(args.family), _load_graph
    )
    _emit(graph.to_json_dict(), args.out)
    return EXIT_OK


def _cmd_label(args) -> int:
    labeling = labelings.label_family(
        families.parse_family_spec(args.family), _load_graph
    )
    payload = {"graph": labeling.graph.to_json_dict(), **labeling.to_json_dict()}
    _emit(payload, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    graph = _load_graph(args.graph)
    pattern = _resolve_pattern(args.pattern)
    labeling = _load_labeling(graph, args.labeling)
    report = verify_supermagic(
        graph,
        pattern,
        labeling,
        max_pattern_vertices=args.max_pattern_vertices,
        max_copies=args.max_copies,
    )
    if args.json or not args.text:
        print(json.dumps(report.to_json_dict(), indent=2))
    if args.text:
        if report.certified:
            print(
                f"certified: magic sum {report.magic_sum} over {len(report.copies)} copies"
            )
        else:
            print(f"not supermagic: {report.failure}")
    return EXIT_OK if report.certified else EXIT_FAIL


def _cmd_search(args) -> int:
    graph = _load_graph(args.graph)
    pattern = _resolve_pattern(args.pattern)
    opts = SearchOptions(
        mode="count" if args.count else "first",
        target_sum=args.target,
        node_limit=args.node_limit,
    )
    outcome = search_supermagic(
        graph,
        pattern,
        opts,
        max_pattern_vertices=args.max_pattern_vertices,
        max_copies=args.max_copies,
    )
    if isinstance(outcome, Solution):
        payload = {
            "outcome": "solution",
            "nodes": outcome.nodes,
            **outcome.labeling.to_json_dict(),
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    if isinstance(outcome, Count):
        print(json.dumps({"outcome": "count", "count": outcome.count, "nodes": outcome.nodes}))
        return EXIT_OK
    if isinstance(outcome, Exhausted):
        print(json.dumps({"outcome": "exhausted", "nodes": outcome.nodes}))
        return EXIT_FAIL
    print(json.dumps({"outcome": "no_solution", "nodes": outcome.nodes}))
    return EXIT_FAIL


def _cmd_export(args) -> int:
    graph = _load_graph(args.graph)
    labeling = _load_labeling(graph, args.labeling) if args.labeling else None
    if args.format == "dot":
        text = _dot(graph, labeling)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    else:
        payload = {"graph": graph.to_json_dict()}
        if labeling is not None:
            payload.update(labeling.to_json_dict())
        _emit(payload, args.out)
    return EXIT_OK


_COMMANDS = {
    "construct": _cmd_construct,
    "label": _cmd_label,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "export": _cmd_export,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    threads = os.environ.get("MAGICCOVER_THREADS")
    if threads is not None:
        # Accepted as a cap on parallelism; the implementation is
        # single-threaded, so any positive value behaves like 1.
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"error: MAGICCOVER_THREADS={threads!r} is not a positive integer",
                  file=sys.stderr)
            return EXIT_USAGE
    as_json = getattr(args, "json", False)
    try:
        return _COMMANDS[args.command](args)
    except MagicCoverError as exc:
        if as_json:
            print(
                json.dumps({"error": type(exc).__name__, "message": str(exc)}),
                file=sys.stderr,
            )
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
