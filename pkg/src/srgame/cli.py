"""Command-line interface.

Subcommands: ``analyze`` one graph, ``generate`` a named family, ``product``
two graphs, ``verify`` the claim sweep, and ``play`` a text-mode game
against the exact engine.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 limit exceeded,
4 verification failures present.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import products
from .analyze import analyze, render_report
from .families import (
    complete,
    complete_multipartite,
    cycle,
    edgeless,
    path,
    petersen,
    spider,
    star,
    tree_from_parents,
)
from .games import (
    MakerBreakerSolver,
    Player,
    resolving_game_system,
    srg_cover_system,
)
from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    LimitExceededError,
    complement,
    format_graph,
    parse_graph,
    parse_graph_json,
    require_connected,
    to_dot,
)
from .resolving import strong_resolving_graph
from .verify import GROUPS, VerifyConfig, run_verification, summarize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_VERIFY = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default; we use 1
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_graph(path_arg: str, fmt: str) -> Graph:
    if path_arg == "-":
        text = sys.stdin.read()
    else:
        with open(path_arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    if fmt == "json":
        return parse_graph_json(text)
    return parse_graph(text)


def _write_graph(g: Graph, out: str | None, comments: list[str], fmt: str = "edges") -> None:
    if fmt == "dot":
        text = to_dot(g)
    else:
        text = format_graph(g, comments)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


FAMILIES = {
    "path": (1, lambda p: path(p[0])),
    "cycle": (1, lambda p: cycle(p[0])),
    "complete": (1, lambda p: complete(p[0])),
    "edgeless": (1, lambda p: edgeless(p[0])),
    "star": (1, lambda p: star(p[0])),
    "petersen": (0, lambda p: petersen()),
    "multipartite": (None, lambda p: complete_multipartite(p)),
    "spider": (None, lambda p: spider(*p)),
    "tree": (None, lambda p: tree_from_parents([None] + p)),
}

PRODUCT_OPS = {
    "corona": products.corona,
    "join": products.join,
    "cartesian": products.cartesian,
    "direct": products.direct,
    "lexicographic": products.lexicographic,
    "modular": products.modular,
}


def _cmd_analyze(args) -> int:
    g = _load_graph(args.input, args.format)
    report = analyze(
        g, source=args.input,
        exact_limit=args.exact_limit,
        rg_limit=args.rg_limit,
        dim_limit=args.dim_limit,
        iso_limit=args.iso_limit,
        include_resolving_game=args.resolving_game,
    )
    if args.json:
        print(json.dumps(report.to_json_obj(), indent=2, sort_keys=True))
    else:
        print(render_report(report))
    return EXIT_OK


def _cmd_generate(args) -> int:
    if args.family not in FAMILIES:
        raise GraphFormatError(f"unknown family {args.family!r}; "
                               f"choose from {sorted(FAMILIES)}")
    arity, build = FAMILIES[args.family]
    params = args.params
    if arity is not None and len(params) != arity:
        print(f"family {args.family} takes {arity} parameter(s)", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = build(params)
    except ValueError as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    label = f"{args.family} {' '.join(map(str, params))}".strip()
    _write_graph(g, args.output, [f"generated: {label}"], fmt=args.to)
    return EXIT_OK


def _cmd_product(args) -> int:
    a = _load_graph(args.a, args.format)
    if args.operation == "complement-a":
        result = complement(a)
        comments = [f"complement of {args.a} (n={a.n})"]
    else:
        if args.b is None:
            print("this operation needs a second input graph", file=sys.stderr)
            return EXIT_USAGE
        b = _load_graph(args.b, args.format)
        op = PRODUCT_OPS[args.operation]
        result = op(a, b)
        comments = [f"{args.operation} product of {args.a} (n={a.n}) and {args.b} (n={b.n})"]
        if args.operation == "corona":
            comments.append(f"encoding: base vertices 0..{a.n - 1}, then one block "
                            f"of {b.n} copy vertices per base vertex")
        else:
            comments.append(f"encoding: vertex (u, w) -> u*{b.n}+w (row-major)")
    _write_graph(result, args.output, comments, fmt=args.to)
    return EXIT_OK


def _cmd_verify(args) -> int:
    groups = args.groups.split(",") if args.groups else None
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("SRGAME_WORKERS", "1"))
    cfg = VerifyConfig(max_sweep_n=args.max_n, seed=args.seed,
                       random_samples=args.samples)
    results = run_verification(groups, cfg, workers=workers)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for r in results:
                fh.write(r.line() + "\n")
    else:
        for r in results:
            print(r.line())
    print(summarize(results), file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def _render_board(n: int, maker: int, breaker: int) -> str:
    cells = []
    for v in range(n):
        if maker >> v & 1:
            cells.append(f"{v}:M")
        elif breaker >> v & 1:
            cells.append(f"{v}:B")
        else:
            cells.append(f"{v}:.")
    return "  ".join(cells)


def _cmd_play(args) -> int:
    g = _load_graph(args.input, args.format)
    require_connected(g, "play")
    if args.game == "srg":
        sr = strong_resolving_graph(g)
        system = srg_cover_system(sr, board="parent")
        goal = "claim one endpoint of every mutually-maximally-distant pair"
    else:
        system = resolving_game_system(g)
        goal = "claim a resolving set"
    solver = MakerBreakerSolver(system, limit=args.exact_limit)
    first = Player.MAKER if args.first == "maker" else Player.BREAKER
    value = solver.winner(first)
    print(f"board: {g.n} vertices; Maker's goal: {goal}")
    print(f"{args.first} moves first; perfect play favors {value.value}")

    maker = breaker = 0
    to_move = first
    while True:
        status = solver.status(maker, breaker)
        if status is not None:
            print(_render_board(g.n, maker, breaker))
            print(f"game over: {status.value} wins")
            if args.human == "none" and status is not value:
                raise RuntimeError("engine playout diverged from solved value")
            return EXIT_OK
        human_turn = args.human == to_move.value
        if human_turn:
            print(_render_board(g.n, maker, breaker))
            try:
                line = input(f"your move as {to_move.value} (vertex id): ").strip()
            except EOFError:
                print("\nno input; resigning", file=sys.stderr)
                return EXIT_OK
            if not line.isdigit():
                print("enter a vertex id")
                continue
            v = int(line)
            if not (0 <= v < g.n) or (maker | breaker) >> v & 1:
                print("illegal move, try again")
                continue
        else:
            v = solver.best_move(maker, breaker, to_move is Player.MAKER)
            print(f"{to_move.value} plays {v}")
        if to_move is Player.MAKER:
            maker |= 1 << v
            to_move = Player.BREAKER
        else:
            breaker |= 1 << v
            to_move = Player.MAKER


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="srgame",
                     description="strong resolving graphs, metric dimensions, and "
                                 "exact Maker-Breaker resolving games")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["edges", "json"], default="edges",
                       help="input format (default: edge list)")

    p = sub.add_parser("analyze", help="full structural report for one graph")
    p.add_argument("input", help="graph file, or - for stdin")
    add_format(p)
    p.add_argument("--json", action="store_true", help="emit the machine record")
    p.add_argument("--exact-limit", type=int, default=20,
                   help="board-size cap for the exact game solver")
    p.add_argument("--rg-limit", type=int, default=14,
                   help="board-size cap for the resolving game")
    p.add_argument("--dim-limit", type=int, default=14,
                   help="order cap for exact metric dimension")
    p.add_argument("--iso-limit", type=int, default=12,
                   help="order cap for exact isomorphism in shape reports")
    p.add_argument("--resolving-game", action="store_true",
                   help="also solve the resolving game")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("generate", help="write a named graph family")
    p.add_argument("family", help=f"one of {sorted(FAMILIES)}")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.add_argument("--to", choices=["edges", "dot"], default="edges")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("product", help="combine two graphs")
    p.add_argument("operation", choices=sorted(PRODUCT_OPS) + ["complement-a"])
    p.add_argument("a", help="first input graph")
    p.add_argument("b", nargs="?", default=None, help="second input graph")
    add_format(p)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--to", choices=["edges", "dot"], default="edges")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("verify", help="run the claim verification sweep")
    p.add_argument("--groups", default=None,
                   help=f"comma-separated subset of {sorted(GROUPS)}")
    p.add_argument("--max-n", type=int, default=6,
                   help="exhaustive sweep order ceiling (default 6)")
    p.add_argument("--samples", type=int, default=10000,
                   help="sample count for randomized claim groups")
    p.add_argument("--seed", type=int, default=VerifyConfig().seed,
                   help="seed for the sampled sweeps")
    p.add_argument("--report", default=None, help="write JSONL records here")
    p.add_argument("--workers", type=int, default=None,
                   help="claim-group parallelism (default: SRGAME_WORKERS or 1)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("play", help="play a game against the exact engine")
    p.add_argument("input", help="graph file, or - for stdin")
    add_format(p)
    p.add_argument("--game", choices=["srg", "rg"], default="srg")
    p.add_argument("--human", choices=["maker", "breaker", "none"], default="maker")
    p.add_argument("--first", choices=["maker", "breaker"], default="maker")
    p.add_argument("--exact-limit", type=int, default=20)
    p.set_defaults(func=_cmd_play)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, DisconnectedGraphError, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LimitExceededError as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
