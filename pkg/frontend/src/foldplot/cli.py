"""foldplot command line: `foldplot render --csv <path> --panel both --out <path.png>`."""

from __future__ import annotations

import argparse
import sys

from .reader import EmptyInput, SchemaError, read_table
from .render import PANELS, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foldplot")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render a sweep CSV to an image")
    p.add_argument("--csv", required=True, help="input CSV path")
    p.add_argument("--panel", choices=PANELS, default="both")
    p.add_argument("--out", default=None, help="output image path (.png, .svg, ...)")
    p.add_argument("--xlabel", default="omega t")
    p.add_argument("--title", default="")
    p.add_argument(
        "--dump-parsed", action="store_true",
        help="print the parsed table byte-identically instead of rendering",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.dump_parsed:
            sys.stdout.write(read_table(args.csv).dump())
            return 0
        if not args.out:
            print("foldplot: error: --out is required to render", file=sys.stderr)
            return 2
        render(FigureSpec(csv=args.csv, out=args.out, panel=args.panel,
                          xlabel=args.xlabel, title=args.title))
        return 0
    except (SchemaError, EmptyInput, OSError) as exc:
        print(f"foldplot: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
