"""Render sweep CSVs into multi-series comparison charts.

The input is the CSV emitted by `sscbound sweep` (exact header pinned in
EXPECTED_HEADER). A chart style names the x column and the value columns to
draw; each value column becomes one line whose y values are the arithmetic
mean over trials at each x. Rendering never modifies the CSV, and rendering
the same inputs to SVG twice produces byte-identical files.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean, pstdev

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "sweepfig"

import matplotlib.pyplot as plt
from matplotlib.ticker import MaxNLocator

EXPECTED_HEADER: tuple[str, ...] = (
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
)


class SweepFigError(Exception):
    """Base error for chart rendering."""


class SchemaMismatch(SweepFigError):
    """The CSV header does not match the sweep format."""


class EmptyData(SweepFigError):
    """The CSV holds no usable data rows."""


@dataclass(frozen=True)
class ChartStyle:
    """Which column supplies x and which value columns become lines."""

    x_column: str
    series: tuple[tuple[str, str], ...]  # (value column, legend label)


STYLES: dict[str, ChartStyle] = {
    # density sweep: exact vs greedy over the generator parameter
    "fig6": ChartStyle(
        "param",
        (("delta_dp", "dp"), ("delta_greedy", "greedy")),
    ),
    # leader-count sweep: exact vs zero forcing, with the diameter overlay
    "fig7": ChartStyle(
        "m_leaders",
        (("delta_dp", "dp"), ("zfs_size", "zfs"), ("diameter", "diameter")),
    ),
    "fig8": ChartStyle(
        "m_leaders",
        (("delta_dp", "dp"), ("zfs_size", "zfs"), ("diameter", "diameter")),
    ),
}


def load_rows(csv_path: str | Path) -> list[dict[str, str]]:
    """Read and validate a sweep CSV.

    Raises EmptyData for an empty file or a header with no data rows, and
    SchemaMismatch when the header differs from the sweep format.
    """
    text = Path(csv_path).read_text(encoding="utf-8")
    if not text.strip():
        raise EmptyData(f"{csv_path} is empty")
    reader = csv.DictReader(text.splitlines())
    if tuple(reader.fieldnames or ()) != EXPECTED_HEADER:
        raise SchemaMismatch(
            f"{csv_path} header {reader.fieldnames} does not match the "
            f"sweep format {list(EXPECTED_HEADER)}"
        )
    rows = list(reader)
    if not rows:
        raise EmptyData(f"{csv_path} has a header but no rows")
    return rows


def series_points(
    rows: list[dict[str, str]], x_column: str, y_column: str
) -> tuple[list[float], list[float], list[float]]:
    """Mean and population-std of y_column grouped by x_column.

    Rows whose error column is set, or whose x or y cell is blank, do not
    contribute. Returns (xs sorted ascending, means, stds); raises EmptyData
    when nothing contributes at all.
    """
    groups: dict[float, list[float]] = {}
    for row in rows:
        if row["error"].strip():
            continue
        x_raw, y_raw = row[x_column].strip(), row[y_column].strip()
        if not x_raw or not y_raw:
            continue
        groups.setdefault(float(x_raw), []).append(float(y_raw))
    if not groups:
        raise EmptyData(f"column {y_column} has no usable values")
    xs = sorted(groups)
    means = [fmean(groups[x]) for x in xs]
    stds = [pstdev(groups[x]) for x in xs]
    return xs, means, stds


def build_figure(
    rows: list[dict[str, str]], style: ChartStyle, std: bool = False
):
    """Build the matplotlib Figure for validated rows under a style."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for column, label in style.series:
        xs, means, stds = series_points(rows, style.x_column, column)
        if std:
            ax.errorbar(
                xs, means, yerr=stds, label=label, marker="o", capsize=3
            )
        else:
            ax.plot(xs, means, label=label, marker="o")
    first = rows[0]
    ax.set_title(
        f"{first['experiment_id']} ({first['family']}, n={first['n']})"
    )
    ax.set_xlabel(style.x_column)
    ax.set_ylabel("mean over trials")
    if style.x_column == "m_leaders":
        ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    return fig


def render(
    csv_path: str | Path,
    style_name: str,
    out_path: str | Path,
    std: bool = False,
) -> Path:
    """Render csv_path under the named style and write out_path.

    The output format follows the suffix: .png or .svg. SVG output carries
    no timestamp, so equal inputs give byte-identical files.
    """
    try:
        style = STYLES[style_name]
    except KeyError:
        raise ValueError(
            f"unknown style {style_name!r}; choose from {sorted(STYLES)}"
        ) from None
    out = Path(out_path)
    if out.suffix not in (".png", ".svg"):
        raise ValueError(f"unsupported output format {out.suffix!r}")
    rows = load_rows(csv_path)
    fig = build_figure(rows, style, std=std)
    try:
        if out.suffix == ".svg":
            fig.savefig(out, format="svg", metadata={"Date": None})
        else:
            fig.savefig(out, format="png", dpi=150)
    finally:
        plt.close(fig)
    return out
