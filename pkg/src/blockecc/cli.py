"""Command-line front end.

Exit codes: 0 success, 1 property violation or counterexample, 2 usage or
parse error, 3 disconnected input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .blocks import build_bc_tree, decompose
from .eccentricity import check_self_centered, full_report
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    dump_edge_list,
    export_dot,
    parse_edge_list,
)
from .lab.generators import (
    MODELS,
    GenSpec,
    cactus_corpus,
    default_corpus,
    fixture_specs,
    fuzz_corpus,
    generate,
    grid_specs,
)
from .lab.suite import PROPERTIES, fuzz_radius_conjecture, run_suite
from .prune import prune, prune_with_choices, random_chooser, verify_replacement
from .randic import check_conjectures, verify_cactus_theorem

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_DISCONNECTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_edge_list(text)


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def cmd_analyze(args) -> int:
    g = _read_graph(args.input)
    report = full_report(g)
    if args.format == "json":
        _emit_json(report.to_json())
        return EXIT_OK
    d = decompose(g)
    print(f"vertices {g.n}, edges {g.m}, blocks {len(d.blocks)}, "
          f"articulation points {sorted(d.articulation_points)}")
    print(f"rad {report.rad}, brad {report.brad}, diam {report.diam}, type {report.graph_type}")
    print(f"center {list(report.center)}, central blocks {list(report.central_blocks)}")
    print(f"periphery {list(report.periphery)}, peripheral blocks {list(report.peripheral_blocks)}")
    if check_self_centered(g).verdict == "self-centered":
        print("self-centered (single block)" if len(d.blocks) == 1 else "self-centered")
    for blk in d.blocks:
        print(f"  B{blk.index}: vertices {list(blk.vertices)}, becc {report.becc[blk.index]}")
    return EXIT_OK


def cmd_bc_tree(args) -> int:
    g = _read_graph(args.input)
    tree = build_bc_tree(g)
    if args.format == "dot":
        sys.stdout.write(tree.to_dot())
    else:
        _emit_json({
            "blocks": [{"index": b.index, "vertices": list(b.vertices)} for b in tree.blocks],
            "cutVertices": list(tree.cut_vertices),
            "treeEdges": [list(e) for e in tree.tree_edges],
        })
    return EXIT_OK


def cmd_prune(args) -> int:
    g = _read_graph(args.input)
    if args.chooser_seed is None:
        result = prune(g)
    else:
        result = prune_with_choices(g, random_chooser(args.chooser_seed))
    checklist = verify_replacement(g, result)
    sidecar = result.to_json()
    sidecar["checklist"] = checklist.to_json()
    if args.sidecar:
        Path(args.sidecar).write_text(json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")
    if args.format == "json":
        sidecar["graph"] = dump_edge_list(result.pruned)
        _emit_json(sidecar)
    elif args.format == "dot":
        sys.stdout.write(export_dot(result.pruned))
    else:
        sys.stdout.write(dump_edge_list(result.pruned))
    return EXIT_OK if checklist.ok else EXIT_VIOLATION


def cmd_randic(args) -> int:
    g = _read_graph(args.input)
    report = check_conjectures(g)
    payload = report.to_json()
    code = EXIT_OK
    if args.pipeline:
        if not report.is_cactus:
            raise UsageError("--pipeline needs a cactus graph")
        pipeline = verify_cactus_theorem(g)
        payload["pipeline"] = pipeline.to_json()
        code = EXIT_OK if pipeline.passed else EXIT_VIOLATION
    if args.format == "json":
        _emit_json(payload)
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return code


def _gen_spec(args) -> GenSpec:
    params = {}
    for name in ("n", "m", "l", "k", "base", "name"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.legs:
        params["legs"] = tuple(int(x) for x in args.legs.split(","))
    return GenSpec.of(args.model, args.seed, **params)


def cmd_gen(args) -> int:
    try:
        g = generate(_gen_spec(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "dot":
        sys.stdout.write(export_dot(g))
    elif args.format == "json":
        _emit_json({"n": g.n, "edges": [list(e) for e in g.edges]})
    else:
        sys.stdout.write(dump_edge_list(g))
    return EXIT_OK


def _corpus(kind: str, trials: int, seed: int, max_n: int) -> list[GenSpec]:
    if kind == "default":
        return default_corpus(trials, seed, max_n)
    if kind == "cactus":
        return cactus_corpus(trials, seed, max_n)
    if kind == "fuzz":
        return fuzz_corpus(trials, seed, max_n)
    if kind == "fixtures":
        return fixture_specs()
    return grid_specs(max_n)


def cmd_verify(args) -> int:
    props = args.property or list(PROPERTIES)
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise UsageError(f"unknown property: {', '.join(unknown)}")
    report = run_suite(props, _corpus(args.corpus, args.trials, args.seed, args.max_n))
    if args.format == "json":
        _emit_json(report.to_json(timing=args.timing))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_fuzz(args) -> int:
    result = fuzz_radius_conjecture(args.trials, args.seed, args.max_n, args.top)
    if args.format == "json":
        _emit_json(result)
    else:
        print(f"{args.trials} graphs, seed {args.seed}; {len(result['exemptEvenPaths'])} even paths exempt")
        for row in result["smallestSlacks"]:
            spec = GenSpec.from_json(row["spec"])
            print(f"  slack {row['slackRadius']:>14.12g}  rad {row['rad']:>3}  n {row['n']:>3}  {spec}")
        if result["counterexamples"]:
            print(f"COUNTEREXAMPLES: {len(result['counterexamples'])}")
    return EXIT_VIOLATION if result["counterexamples"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockecc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", default="-", help="edge-list file, '-' for stdin")
        return p

    p = with_input(sub.add_parser("analyze", help="eccentricity report"))
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = with_input(sub.add_parser("bc-tree", help="block-cutpoint tree"))
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_bc_tree)

    p = with_input(sub.add_parser("prune", help="radius-preserving pruned subgraph"))
    p.add_argument("--format", choices=["edgelist", "json", "dot"], default="edgelist")
    p.add_argument("--sidecar", help="write choice log, deleted blocks and checklist here")
    p.add_argument("--chooser-seed", type=int, help="pick farthest vertices and geodesics at random")
    p.set_defaults(func=cmd_prune)

    p = with_input(sub.add_parser("randic", help="Randić index and conjecture slacks"))
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--pipeline", action="store_true", help="also run the cactus bound pipeline")
    p.set_defaults(func=cmd_randic)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("model", choices=MODELS)
    for name in ("n", "m", "l", "k", "base"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--legs", help="comma-separated spider leg lengths")
    p.add_argument("--name", help="fixture name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["edgelist", "dot", "json"], default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("--property", action="append", help=f"one of: {', '.join(PROPERTIES)}")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--corpus", choices=["default", "cactus", "fuzz", "fixtures", "grid"], default="default")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--timing", action="store_true", help="include wall times in JSON output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="search general graphs for Rand < rad")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for flag in ("trials", "max_n", "top"):
        if getattr(args, flag, 0) is not None and getattr(args, flag, 0) < 0:
            print(f"error: --{flag.replace('_', '-')} must be non-negative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except (GraphError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED


if __name__ == "__main__":
    sys.exit(main())
