"""Comparison charts from sweep CSVs.

Consumes only the delimited output of `sscbound sweep` — the exact header is
pinned in EXPECTED_HEADER — and renders mean-over-trials line charts to PNG
or SVG.
"""

from .render import (
    EXPECTED_HEADER,
    STYLES,
    ChartStyle,
    EmptyData,
    SchemaMismatch,
    SweepFigError,
    build_figure,
    load_rows,
    render,
    series_points,
)

__version__ = "0.1.0"
