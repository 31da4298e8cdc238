"""Command-line interface: gen / bound / sweep / verify subcommands."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BadParams, SscBoundError
from .graph import format_edge_list, make_rng, read_edge_list
from .oracles import DEFAULT_RANK_TOL, verify_rank_dominance
from .reports import ALL_METHODS, SweepSpec, _gen_family, run_bound, run_sweep, sweep_rows_to_csv
from .exact import DEFAULT_CELL_CAP

__all__ = ["main"]

FAMILIES = ["er", "ba", "path", "cycle"]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _add_instance_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph", metavar="FILE", help="edge-list file to load")
    sub.add_argument("--family", choices=FAMILIES, help="generate instead of loading")
    sub.add_argument("--n", type=int, help="node count for --family")
    sub.add_argument(
        "--param",
        type=float,
        help="edge probability (er) or attachment count (ba)",
    )
    sub.add_argument(
        "--connected",
        action="store_true",
        help="resample er draws until connected (up to 100 times)",
    )
    sub.add_argument("--seed", type=int, default=0, help="generator seed")
    sub.add_argument(
        "--leaders", metavar="IDS", help="comma-separated leader node ids"
    )
    sub.add_argument(
        "--random-leaders",
        type=int,
        metavar="K",
        help="draw K distinct leaders uniformly (seeded)",
    )


def _build_instance(args):
    rng = make_rng(args.seed)
    if args.graph and (args.family or args.n is not None):
        raise BadParams("--graph and --family/--n are mutually exclusive")
    if args.graph:
        g = read_edge_list(args.graph)
        family = param = None
    else:
        if not args.family or args.n is None:
            raise BadParams("need --graph, or --family with --n")
        family = args.family
        param = args.param
        if family in ("er", "ba") and param is None:
            raise BadParams(f"--param is required for family {family!r}")
        g = _gen_family(family, args.n, param, rng, args.connected)
        if family == "ba":
            param = int(param)
    if args.leaders:
        leaders = [int(x) for x in args.leaders.split(",") if x.strip() != ""]
    elif args.random_leaders:
        if args.random_leaders > g.n:
            raise BadParams(f"{args.random_leaders} leaders but only {g.n} nodes")
        leaders = sorted(int(x) for x in rng.choice(g.n, size=args.random_leaders, replace=False))
    else:
        raise BadParams("need --leaders or --random-leaders")
    return g, leaders, family, param


def _cmd_gen(args) -> int:
    rng = make_rng(args.seed)
    if args.family in ("er", "ba") and args.param is None:
        raise BadParams(f"--param is required for family {args.family!r}")
    g = _gen_family(args.family, args.n, args.param, rng, args.connected)
    _emit(format_edge_list(g), args.out)
    return 0


def _cmd_bound(args) -> int:
    g, leaders, family, param = _build_instance(args)
    methods = tuple(args.methods.split(","))
    rep = run_bound(
        g,
        leaders,
        methods=methods,
        family=family,
        param=param,
        seed=args.seed,
        dp_cell_cap=args.dp_cell_cap,
        include_points=args.points,
    )
    _emit(json.dumps(rep.to_json(), indent=2) + "\n", args.out)
    return 0


def _cmd_sweep(args) -> int:
    if args.family in ("er", "ba"):
        if not args.params:
            raise BadParams(f"--params is required for family {args.family!r}")
        cast = float if args.family == "er" else int
        params = tuple(cast(x) for x in args.params.split(","))
    else:
        params = (None,)
    spec = SweepSpec(
        experiment_id=args.experiment_id,
        family=args.family,
        n=args.n,
        params=params,
        leader_counts=tuple(int(x) for x in args.leader_counts.split(",")),
        trials=args.trials,
        master_seed=args.seed,
        methods=tuple(args.methods.split(",")),
        connected=not args.allow_disconnected,
        dp_cell_cap=args.dp_cell_cap,
    )
    rows = run_sweep(spec)
    _emit(sweep_rows_to_csv(rows), args.out)
    return 0


def _cmd_verify(args) -> int:
    g, leaders, _, _ = _build_instance(args)
    report = verify_rank_dominance(
        g, leaders, trials=args.trials, seed=args.seed, tol=args.tol
    )
    payload = [s.to_json() for s in report.samples]
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    status = "ok" if report.ok else "VIOLATION"
    print(
        f"delta={report.delta} min_rank={report.min_rank} "
        f"samples={len(report.samples)} -> {status}",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sscbound",
        description=(
            "Distance-based lower bounds on the controllability rank of "
            "leader-follower Laplacian networks."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="generate a graph and print its edge list")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--param", type=float)
    gen.add_argument("--connected", action="store_true")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", metavar="FILE")
    gen.set_defaults(func=_cmd_gen)

    bound = subs.add_parser("bound", help="evaluate bounds on one instance")
    _add_instance_args(bound)
    bound.add_argument("--methods", default=",".join(ALL_METHODS))
    bound.add_argument("--dp-cell-cap", type=int, default=DEFAULT_CELL_CAP)
    bound.add_argument(
        "--points", action="store_true", help="include the point set in the report"
    )
    bound.add_argument("--out", metavar="FILE")
    bound.set_defaults(func=_cmd_bound)

    sweep = subs.add_parser("sweep", help="run a parameter grid and emit CSV")
    sweep.add_argument("--family", choices=FAMILIES, required=True)
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--params", help="comma-separated parameter grid")
    sweep.add_argument("--leader-counts", required=True, help="comma-separated counts")
    sweep.add_argument("--trials", type=int, default=20)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--methods", default=",".join(ALL_METHODS))
    sweep.add_argument("--experiment-id", default="sweep")
    sweep.add_argument("--dp-cell-cap", type=int, default=DEFAULT_CELL_CAP)
    sweep.add_argument(
        "--allow-disconnected",
        action="store_true",
        help="skip the connectivity resampling filter for er",
    )
    sweep.add_argument("--out", metavar="FILE")
    sweep.set_defaults(func=_cmd_sweep)

    verify = subs.add_parser(
        "verify", help="sample random weightings and check rank >= bound"
    )
    _add_instance_args(verify)
    verify.add_argument("--trials", type=int, default=20)
    verify.add_argument("--tol", type=float, default=DEFAULT_RANK_TOL)
    verify.add_argument("--out", metavar="FILE")
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SscBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
