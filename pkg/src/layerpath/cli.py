"""Command line front end.

Commands: ``load-summary``, ``sssp``, ``apsp``, ``sweep``, ``bench``,
``generate``, ``aggregate-export``. Every command reads one edge-list CSV
(except ``generate``, which writes one) and emits CSV, JSON, or plain text to
stdout or ``-o``. Emissions are deterministic for identical inputs and
flags: rows are keyed by ascending node id, grids keep the order they were
given in.

Exit codes: 0 success; 2 usage errors (bad flags, unknown source node,
invalid thresholds); 3 input errors (unreadable, malformed, or rule-breaking
edge lists); 4 size-guard refusals.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from contextlib import contextmanager

from .aggregate import AggregationParams, aggregate_graph
from .analytics import STATS_COLUMNS, edge_count_sweep, path_stats, stats_table
from .bench import benchmark, format_bench_report
from .core import NEGATIVE, POSITIVE, MultiLayeredNetwork
from .edgelist import (
    ON_DUPLICATE_ERROR,
    ON_DUPLICATE_KEEP_MAX,
    format_load_summary,
    load_edge_list,
    write_edge_csv,
)
from .errors import (
    GraphError,
    ParameterError,
    ParseError,
    SizeGuardExceededError,
    UnknownNodeError,
)
from .generate import random_network
from .paths import (
    DEFAULT_APSP_NODE_CAP,
    aggregated_sssp,
    apsp_repeated_dijkstra,
    mda_sssp,
    ml_floyd_warshall,
)

FLOYD_WARSHALL = "floyd-warshall"
REPEATED_DIJKSTRA = "repeated-dijkstra"


# -- small plumbing --------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


@contextmanager
def _out_stream(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def _cell(value) -> str:
    """CSV cell text: repr for floats (so inf prints as 'inf'), str otherwise."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_length(value: float):
    return value if math.isfinite(value) else None


def _load(args) -> MultiLayeredNetwork:
    return load_edge_list(
        args.path, polarity=args.polarity, on_duplicate=args.on_duplicate
    )


def _sources_from(args, net: MultiLayeredNetwork) -> list[int]:
    flat: list[int] = []
    for group in args.source or []:
        flat.extend(group)
    sources = sorted(set(flat))
    for source in sources:
        if not net.has_node(source):
            raise UnknownNodeError(f"unknown source node {source}")
    return sources


def _path_text(path: list[int]) -> str:
    return "->".join(str(v) for v in path)


# -- commands ---------------------------------------------------------------


def cmd_generate(args) -> int:
    net = random_network(
        args.nodes,
        args.layers,
        args.density,
        seed=args.seed,
        polarity=args.polarity,
    )
    with _out_stream(args.output) as out:
        write_edge_csv(net, out)
    return 0


def cmd_load_summary(args) -> int:
    net = _load(args)
    with _out_stream(args.output) as out:
        out.write(format_load_summary(net, name=args.path) + "\n")
    return 0


def cmd_sssp(args) -> int:
    net = _load(args)
    sources = _sources_from(args, net)
    if not sources:
        raise ParameterError("sssp requires at least one --source")
    alphas = args.alphas if args.alphas is not None else [args.alpha]
    betas = args.betas if args.betas is not None else [args.beta]

    stats_rows = []
    path_rows = []
    for source in sources:
        for alpha in alphas:
            for beta in betas:
                params = AggregationParams(alpha, beta)
                if args.strategy == "mda":
                    result = mda_sssp(net, source, params)
                else:
                    result = aggregated_sssp(aggregate_graph(net, params), source)
                stats_rows.append(path_stats(result, net, params).as_row())
                if args.paths:
                    for target in sorted(net.nodes):
                        if target == source:
                            continue
                        path_rows.append(
                            (
                                source,
                                params.effective_alpha,
                                params.effective_beta,
                                target,
                                result.length(target),
                                result.path_to(target),
                            )
                        )

    with _out_stream(args.output) as out:
        if args.format == "json":
            payload: dict = {
                "stats": [dict(zip(STATS_COLUMNS, row)) for row in stats_rows]
            }
            if args.paths:
                payload["paths"] = [
                    {
                        "source": src,
                        "alpha": alpha,
                        "beta": beta,
                        "target": target,
                        "length": _json_length(length),
                        "path": path,
                    }
                    for src, alpha, beta, target, length, path in path_rows
                ]
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(STATS_COLUMNS)
            for row in stats_rows:
                writer.writerow([_cell(v) for v in row])
            if args.paths:
                out.write("\n")
                writer.writerow(("source", "alpha", "beta", "target", "length", "path"))
                for src, alpha, beta, target, length, path in path_rows:
                    writer.writerow(
                        (src, alpha, _cell(beta), target, _cell(length), _path_text(path))
                    )
    return 0


def cmd_apsp(args) -> int:
    net = _load(args)
    params = AggregationParams(args.alpha, args.beta)
    if args.strategy == REPEATED_DIJKSTRA:
        matrix = apsp_repeated_dijkstra(
            net, params, max_nodes=args.max_nodes, jobs=args.jobs
        )
    else:
        matrix = ml_floyd_warshall(net, params, max_nodes=args.max_nodes)

    with _out_stream(args.output) as out:
        if args.format == "json":
            payload = {
                "alpha": params.effective_alpha,
                "beta": params.effective_beta,
                "order": matrix.order,
                "matrix": [
                    [_json_length(float(v)) for v in row] for row in matrix.values
                ],
            }
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["src"] + [str(v) for v in matrix.order])
            for node, row in zip(matrix.order, matrix.values):
                writer.writerow([str(node)] + [repr(float(v)) for v in row])
    return 0


def cmd_sweep(args) -> int:
    net = _load(args)
    report = edge_count_sweep(net, args.alphas, args.betas)
    sources = _sources_from(args, net)

    stats_rows = []
    if sources:
        for alpha in report.alphas:
            for beta in report.betas:
                table = stats_table(net, AggregationParams(alpha, beta), sources)
                stats_rows.extend(row.as_row() for row in table)

    with _out_stream(args.output) as out:
        if args.format == "json":
            payload: dict = {
                "alphas": list(report.alphas),
                "betas": list(report.betas),
                "counts": [list(row) for row in report.counts],
            }
            if sources:
                payload["stats"] = [
                    dict(zip(STATS_COLUMNS, row)) for row in stats_rows
                ]
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("alpha", "beta", "num_edges"))
            for i, alpha in enumerate(report.alphas):
                for j, beta in enumerate(report.betas):
                    writer.writerow((alpha, _cell(beta), report.counts[i][j]))
            if sources:
                out.write("\n")
                writer.writerow(STATS_COLUMNS)
                for row in stats_rows:
                    writer.writerow([_cell(v) for v in row])
    return 0


def cmd_bench(args) -> int:
    net = _load(args)
    if args.reps < 3:
        raise ParameterError(f"bench requires --reps >= 3, got {args.reps}")
    sources = _sources_from(args, net)
    if not sources:
        sources = sorted(net.nodes)[: args.default_sources]
        if not sources:
            raise ParameterError("network has no nodes to benchmark")
    params = AggregationParams(args.alpha, args.beta)
    report = benchmark(net, sources, params, reps=args.reps)
    with _out_stream(args.output) as out:
        out.write(format_bench_report(report) + "\n")
    return 0


def cmd_aggregate_export(args) -> int:
    net = _load(args)
    graph = aggregate_graph(net, AggregationParams(args.alpha, args.beta))
    edges = sorted(graph.edges(), key=lambda e: (e.src, e.dst))
    with _out_stream(args.output) as out:
        if args.format == "json":
            payload = [
                {
                    "src": e.src,
                    "dst": e.dst,
                    "distance": e.distance,
                    "layer_count": e.layer_count,
                }
                for e in edges
            ]
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("src", "dst", "distance", "layer_count"))
            for e in edges:
                writer.writerow((e.src, e.dst, repr(e.distance), e.layer_count))
    return 0


# -- parser -----------------------------------------------------------------


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("path", help="edge-list CSV (header src,dst,layer,weight)")
    p.add_argument(
        "--polarity",
        choices=(POSITIVE, NEGATIVE),
        default=POSITIVE,
        help="how raw weights are read (default: positive)",
    )
    p.add_argument(
        "--on-duplicate",
        choices=(ON_DUPLICATE_ERROR, ON_DUPLICATE_KEEP_MAX),
        default=ON_DUPLICATE_ERROR,
        help="duplicate (src,dst,layer) policy (default: error)",
    )


def _add_output_args(p: argparse.ArgumentParser, formats=("csv", "json")) -> None:
    if formats:
        p.add_argument(
            "--format", choices=formats, default=formats[0],
            help=f"output format (default: {formats[0]})",
        )
    p.add_argument("-o", "--output", default=None, help="output file (default: stdout)")


def _add_threshold_args(p: argparse.ArgumentParser, grids: bool = False) -> None:
    p.add_argument("--alpha", type=int, default=1, help="layer-count threshold (default: 1)")
    p.add_argument("--beta", type=float, default=1.0, help="distance threshold (default: 1.0)")
    if grids:
        p.add_argument("--alphas", type=_int_list, default=None,
                       help="comma-separated alpha grid, overrides --alpha")
        p.add_argument("--betas", type=_float_list, default=None,
                       help="comma-separated beta grid, overrides --beta")


def _add_source_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--source", action="append", type=_int_list, default=None, metavar="NODES",
        help="source node id(s); repeatable, comma lists allowed",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="layerpath",
        description="Shortest paths in multi-layered directed networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a random multi-layer edge list")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--layers", type=int, required=True)
    p.add_argument("--density", type=float, required=True,
                   help="per-layer edge density in [0,1]")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--polarity", choices=(POSITIVE, NEGATIVE), default=POSITIVE)
    _add_output_args(p, formats=())
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("load-summary", help="parse an edge list and print its shape")
    _add_input_args(p)
    _add_output_args(p, formats=())
    p.set_defaults(func=cmd_load_summary)

    p = sub.add_parser("sssp", help="single-source shortest paths and stats")
    _add_input_args(p)
    _add_threshold_args(p, grids=True)
    _add_source_arg(p)
    p.add_argument("--strategy", choices=("dap", "mda"), default="dap",
                   help="preprocessing (dap) or on-the-fly (mda) search")
    p.add_argument("--paths", action="store_true",
                   help="also emit the full per-target path dump")
    _add_output_args(p)
    p.set_defaults(func=cmd_sssp)

    p = sub.add_parser("apsp", help="all-pairs shortest path matrix")
    _add_input_args(p)
    _add_threshold_args(p)
    p.add_argument("--strategy", choices=(FLOYD_WARSHALL, REPEATED_DIJKSTRA),
                   default=FLOYD_WARSHALL)
    p.add_argument("--max-nodes", type=int, default=DEFAULT_APSP_NODE_CAP,
                   help=f"size guard (default: {DEFAULT_APSP_NODE_CAP})")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for repeated-dijkstra")
    _add_output_args(p)
    p.set_defaults(func=cmd_apsp)

    p = sub.add_parser("sweep", help="aggregated edge counts over a threshold grid")
    _add_input_args(p)
    p.add_argument("--alphas", type=_int_list, required=True,
                   help="comma-separated alpha grid")
    p.add_argument("--betas", type=_float_list, required=True,
                   help="comma-separated beta grid")
    _add_source_arg(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="time preprocessing vs on-the-fly search")
    _add_input_args(p)
    _add_threshold_args(p)
    _add_source_arg(p)
    p.add_argument("--reps", type=int, default=3, help="repetitions, >= 3")
    p.add_argument("--default-sources", type=int, default=10,
                   help="how many lowest node ids to use when --source is absent")
    _add_output_args(p, formats=())
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("aggregate-export", help="export the aggregated edge set")
    _add_input_args(p)
    _add_threshold_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_aggregate_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed its message; fold --help's exit in
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except SizeGuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (UnknownNodeError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
