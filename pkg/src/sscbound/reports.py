"""Bound reports and parameter sweeps.

run_bound evaluates the requested bound methods on one instance and returns
a JSON-ready report. run_sweep drives a grid of (parameter, leader count)
points with per-trial derived seeds and writes one CSV row per trial. Rows
are deterministic given the SweepSpec: rerunning reproduces every column except
the runtime ones.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from typing import Sequence

from .dlv import DlvPointSet, build_dlv, point_str
from .errors import (
    BadParams,
    InvariantViolation,
    SscBoundError,
    TableTooLarge,
    TooFewLeaders,
)
from .exact import DEFAULT_CELL_CAP, solve_dp
from .graph import (
    Graph,
    LeaderSet,
    derive_seed,
    diameter,
    gen_barabasi_albert,
    gen_cycle,
    gen_erdos_renyi,
    gen_path,
    make_rng,
)
from .greedy import pmi_greedy
from .topology import cycle_bound, is_cycle_graph, is_path_graph, path_bound, _position_order
from .zero_forcing import derived_set

__all__ = [
    "ALL_METHODS",
    "CSV_HEADER",
    "BoundReport",
    "SweepSpec",
    "closed_form_bound",
    "run_bound",
    "run_sweep",
    "sweep_rows_to_csv",
]

ALL_METHODS = ("dp", "greedy", "zfs", "closed_form")

CSV_HEADER = [
    "experiment_id",
    "family",
    "n",
    "param",
    "m_leaders",
    "trial",
    "seed",
    "delta_dp",
    "delta_greedy",
    "zfs_size",
    "closed_form",
    "diameter",
    "dp_ms",
    "greedy_ms",
    "error",
]


@dataclass
class BoundReport:
    """All requested bounds for one (graph, leader set) instance."""

    family: str | None
    n: int
    param: float | None
    seed: int | None
    leaders: tuple[int, ...]
    diameter: int
    delta_dp: int | None = None
    delta_greedy: int | None = None
    zfs_size: int | None = None
    closed_form: int | None = None
    dp_ms: float | None = None
    greedy_ms: float | None = None
    dp_cells_touched: int | None = None
    dp_witness: list | None = None
    greedy_witness: list | None = None
    points: list | None = None
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "n": self.n,
            "param": self.param,
            "seed": self.seed,
            "leaders": list(self.leaders),
            "m_leaders": len(self.leaders),
            "diameter": self.diameter,
            "delta_dp": self.delta_dp,
            "delta_greedy": self.delta_greedy,
            "zfs_size": self.zfs_size,
            "closed_form": self.closed_form,
            "warnings": list(self.warnings),
        }
        if self.points is not None:
            out["points"] = self.points
        methods = {}
        if self.delta_dp is not None:
            methods["dp"] = {
                "method": "dp",
                "delta": self.delta_dp,
                "witness": self.dp_witness,
                "table_cells_touched": self.dp_cells_touched,
                "runtime_ms": self.dp_ms,
            }
        if self.delta_greedy is not None:
            methods["greedy"] = {
                "method": "greedy",
                "delta": self.delta_greedy,
                "witness": self.greedy_witness,
                "runtime_ms": self.greedy_ms,
            }
        out["methods"] = methods
        return out


def closed_form_bound(g: Graph, leaders: LeaderSet | Sequence[int]) -> int | None:
    """Path/cycle closed form for an arbitrary labeling, None off-family.

    Walks the graph to recover canonical positions first, so relabeled paths
    and cycles are handled. Raises TooFewLeaders for single-leader cycles.
    """
    ls = LeaderSet.of(leaders)
    if is_path_graph(g) and g.n >= 2:
        pos = {v: k for k, v in enumerate(_position_order(g))}
        return path_bound(g.n, [pos[v] for v in ls])
    if is_cycle_graph(g):
        pos = {v: k for k, v in enumerate(_position_order(g))}
        return cycle_bound(g.n, [pos[v] for v in ls])
    return None


def _check_invariants(ps: DlvPointSet, rep: BoundReport) -> None:
    n = rep.n
    z_max = max(len(vals) for vals in ps.unique_values)
    checks = [
        (rep.delta_dp is None or rep.delta_dp <= n, "dp bound exceeds n"),
        (rep.delta_greedy is None or rep.delta_greedy <= n, "greedy bound exceeds n"),
        (rep.zfs_size is None or rep.zfs_size <= n, "zfs size exceeds n"),
        (
            rep.delta_dp is None
            or rep.delta_greedy is None
            or rep.delta_greedy <= rep.delta_dp,
            "greedy exceeds the exact dp bound",
        ),
        (
            rep.delta_dp is None or rep.zfs_size is None or rep.zfs_size <= rep.delta_dp,
            "zfs size exceeds the exact dp bound",
        ),
        (
            rep.delta_greedy is None or rep.delta_greedy >= z_max,
            "greedy fell below the distinct-values floor",
        ),
        (
            rep.delta_greedy is None or rep.delta_greedy >= ps.m,
            "greedy fell below the leader-count floor",
        ),
    ]
    for ok, msg in checks:
        if not ok:
            raise InvariantViolation(f"{msg} (report: {rep.to_json()})")


def run_bound(
    g: Graph,
    leaders: LeaderSet | Sequence[int],
    methods: Sequence[str] = ALL_METHODS,
    family: str | None = None,
    param: float | None = None,
    seed: int | None = None,
    dp_cell_cap: int = DEFAULT_CELL_CAP,
    include_points: bool = False,
) -> BoundReport:
    """Evaluate the requested methods on one instance.

    A TableTooLarge in the dp method downgrades to a warning (delta_dp stays
    None) instead of aborting; genuine input errors still raise.
    """
    ls = LeaderSet.of(leaders)
    for name in methods:
        if name not in ALL_METHODS:
            raise BadParams(f"unknown method {name!r}; choose from {ALL_METHODS}")
    ps = build_dlv(g, ls)
    rep = BoundReport(
        family=family,
        n=g.n,
        param=param,
        seed=seed,
        leaders=tuple(ls),
        diameter=diameter(g),
    )
    if include_points:
        rep.points = [
            {"point": point_str(ps.points[k]), "owners": list(ps.owners[k])}
            for k in ps.sorted_orders[0]
        ]
    if "dp" in methods:
        try:
            solve = solve_dp(ps, cell_cap=dp_cell_cap)
            rep.delta_dp = solve.delta
            rep.dp_ms = solve.runtime_ms
            rep.dp_cells_touched = solve.cells_touched
            rep.dp_witness = [
                [p, c] for p, c in solve.sequence.witness_pairs(ps)
            ]
        except TableTooLarge as exc:
            rep.warnings.append(f"TableTooLarge: {exc}")
    if "greedy" in methods:
        t0 = time.perf_counter()
        seq = pmi_greedy(ps)
        rep.greedy_ms = (time.perf_counter() - t0) * 1000.0
        rep.delta_greedy = len(seq)
        rep.greedy_witness = [[p, c] for p, c in seq.witness_pairs(ps)]
    if "zfs" in methods:
        rep.zfs_size = derived_set(g, ls).size
    if "closed_form" in methods:
        try:
            rep.closed_form = closed_form_bound(g, ls)
        except TooFewLeaders as exc:
            rep.warnings.append(f"TooFewLeaders: {exc}")
    _check_invariants(ps, rep)
    return rep


@dataclass(frozen=True)
class SweepSpec:
    """Grid description for run_sweep.

    params holds ER edge probabilities, BA attachment counts, or (None,) for
    parameter-free families. The grid is the cross product params x
    leader_counts, enumerated in that order; trial seeds derive from
    (master_seed, grid index, trial index).
    """

    experiment_id: str
    family: str
    n: int
    params: tuple
    leader_counts: tuple[int, ...]
    trials: int
    master_seed: int
    methods: tuple[str, ...] = ALL_METHODS
    connected: bool = True
    dp_cell_cap: int = DEFAULT_CELL_CAP

    def __post_init__(self) -> None:
        if self.family not in ("er", "ba", "path", "cycle"):
            raise BadParams(f"unknown family {self.family!r}")
        if not self.params or not self.leader_counts:
            raise BadParams("params and leader_counts must be nonempty")
        if self.trials < 1:
            raise BadParams("trials must be >= 1")
        if any(m < 1 or m > self.n for m in self.leader_counts):
            raise BadParams("leader counts must lie in 1..n")

    def grid(self) -> list[tuple]:
        return [(p, m) for p in self.params for m in self.leader_counts]


def _gen_family(family: str, n: int, param, rng, connected: bool) -> Graph:
    if family == "er":
        return gen_erdos_renyi(n, float(param), seed=rng, connected=connected)
    if family == "ba":
        return gen_barabasi_albert(n, int(param), seed=rng)
    if family == "path":
        return gen_path(n)
    if family == "cycle":
        return gen_cycle(n)
    raise BadParams(f"unknown family {family!r}")


def run_sweep(spec: SweepSpec, out_path: str | None = None) -> list[dict]:
    """Run the grid and return CSV-ready row dicts (writing them if asked).

    Per-trial failures (e.g. no connected draw) land in the row's error
    column; solver-invariant violations abort the sweep.
    """
    rows: list[dict] = []
    for gi, (param, m) in enumerate(spec.grid()):
        for trial in range(spec.trials):
            seed = derive_seed(spec.master_seed, gi, trial)
            row = {
                "experiment_id": spec.experiment_id,
                "family": spec.family,
                "n": spec.n,
                "param": "" if param is None else param,
                "m_leaders": m,
                "trial": trial,
                "seed": seed,
                "delta_dp": "",
                "delta_greedy": "",
                "zfs_size": "",
                "closed_form": "",
                "diameter": "",
                "dp_ms": "",
                "greedy_ms": "",
                "error": "",
            }
            try:
                if m > spec.n:
                    raise BadParams(f"{m} leaders but only {spec.n} nodes")
                rng = make_rng(seed)
                g = _gen_family(spec.family, spec.n, param, rng, spec.connected)
                leaders = sorted(
                    int(x) for x in rng.choice(spec.n, size=m, replace=False)
                )
                rep = run_bound(
                    g,
                    leaders,
                    methods=spec.methods,
                    family=spec.family,
                    param=param,
                    seed=seed,
                    dp_cell_cap=spec.dp_cell_cap,
                )
                row["diameter"] = rep.diameter
                if rep.delta_dp is not None:
                    row["delta_dp"] = rep.delta_dp
                if rep.delta_greedy is not None:
                    row["delta_greedy"] = rep.delta_greedy
                if rep.zfs_size is not None:
                    row["zfs_size"] = rep.zfs_size
                if rep.closed_form is not None:
                    row["closed_form"] = rep.closed_form
                if rep.dp_ms is not None:
                    row["dp_ms"] = f"{rep.dp_ms:.3f}"
                if rep.greedy_ms is not None:
                    row["greedy_ms"] = f"{rep.greedy_ms:.3f}"
                row["error"] = "; ".join(rep.warnings)
            except InvariantViolation:
                raise
            except SscBoundError as exc:
                row["error"] = f"{type(exc).__name__}: {exc}"
            rows.append(row)
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(sweep_rows_to_csv(rows))
    return rows


def sweep_rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([row[key] for key in CSV_HEADER])
    return buf.getvalue()
