"""Command line for rendering sweep CSVs to chart images."""

from __future__ import annotations

import argparse
import sys

from .render import STYLES, SweepFigError, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="sweepfig",
        description=(
            "Render a CSV produced by `sscbound sweep` into a multi-series "
            "comparison chart."
        ),
    )
    parser.add_argument("csv", help="input sweep CSV")
    parser.add_argument(
        "--style",
        required=True,
        choices=sorted(STYLES),
        help=(
            "fig6: dp and greedy means vs param; "
            "fig7/fig8: dp, zfs, and diameter means vs m_leaders"
        ),
    )
    parser.add_argument(
        "--out", required=True, help="output image path (.png or .svg)"
    )
    parser.add_argument(
        "--std",
        action="store_true",
        help="draw one-standard-deviation error bars",
    )
    args = parser.parse_args(argv)
    try:
        out = render(args.csv, args.style, args.out, std=args.std)
    except (SweepFigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
