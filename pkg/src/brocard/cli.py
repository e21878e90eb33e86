"""Command-line front end.

Exit codes: 0 success, 1 unparsable input, 2 degenerate input, 3 a claim
failed, 4 internal error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .centers import center_set
from .geom import GeometryError
from .relations import CLAIM_IDS, rank_profile, verify_all, verify_claim
from .report import (
    DegenerateSpec,
    MalformedJson,
    ReportDocument,
    SpecError,
    TriangleSpec,
    parse_triangle_spec,
)
from .search import SearchConfig, rank_scan
from .svg import LAYERS, render_svg

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE, EXIT_CLAIM, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2, which means "degenerate" here
        raise UsageError(message)


def read_spec(arg: str) -> TriangleSpec:
    """A spec argument is inline JSON, ``-`` for stdin, or a path to a JSON file."""
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        try:
            text = Path(arg).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise MalformedJson("spec", f"cannot read {arg!r}: {exc}") from exc
    return parse_triangle_spec(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brocard", description="Exact Brocard geometry of rational triangles.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--json", action="store_true", help="JSON output (the default)")
    fmt.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("centers", parents=[fmt], help="print every named point of the triangle")
    p.add_argument("spec")

    p = sub.add_parser("verify", parents=[fmt], help="check the Brocard claims exactly")
    p.add_argument("spec")
    p.add_argument("--claim", choices=CLAIM_IDS)

    p = sub.add_parser("rank", parents=[fmt], help="orthology/homology outcomes for all six pairings")
    p.add_argument("spec_a")
    p.add_argument("spec_b")

    p = sub.add_parser("search", parents=[fmt], help="random search for high-rank triangle pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--coordinate-bound", type=int, default=10)
    p.add_argument("--denominator-bound", type=int, default=8)
    p.add_argument("--threshold", type=float, default=1e-7)
    p.add_argument("--refine-steps", type=int, default=0)
    p.add_argument("--snap-denominator", type=int, default=1000)

    p = sub.add_parser("figure", help="write an SVG figure")
    p.add_argument("spec")
    p.add_argument("--out", required=True, help="output file, or - for stdout")
    p.add_argument(
        "--show",
        action="append",
        default=[],
        metavar="LAYER",
        help=f"layer to draw, repeatable or comma separated: {', '.join(LAYERS)}",
    )
    return parser


def _emit(doc: ReportDocument, args) -> None:
    sys.stdout.write(doc.dumps(pretty=args.pretty) + "\n")


def _run(args) -> int:
    if args.command == "centers":
        spec = read_spec(args.spec)
        doc = ReportDocument("centers", input=spec.to_json(), centers=center_set(spec.triangle()))
        _emit(doc, args)
        return EXIT_OK

    if args.command == "verify":
        spec = read_spec(args.spec)
        T = spec.triangle()
        if args.claim:
            claims = [verify_claim(T, args.claim)]
        else:
            claims = verify_all(T)
        _emit(ReportDocument("verify", input=spec.to_json(), claims=tuple(claims)), args)
        return EXIT_OK if all(c.passed for c in claims) else EXIT_CLAIM

    if args.command == "rank":
        a, b = read_spec(args.spec_a), read_spec(args.spec_b)
        profile = rank_profile(a.triangle(), b.triangle())
        _emit(ReportDocument("rank", input=[a.to_json(), b.to_json()], rank_profiles=(profile,)), args)
        return EXIT_OK

    if args.command == "search":
        try:
            cfg = SearchConfig(
                seed=args.seed,
                samples=args.samples,
                coordinate_bound=args.coordinate_bound,
                denominator_bound=args.denominator_bound,
                residual_threshold=args.threshold,
                refine_steps=args.refine_steps,
                snap_denominator=args.snap_denominator,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        findings = rank_scan(cfg)
        _emit(ReportDocument("search", config=cfg, seeds=(cfg.seed,), findings=tuple(findings)), args)
        return EXIT_OK

    if args.command == "figure":
        layers = sorted({part.strip() for item in args.show for part in item.split(",") if part.strip()})
        bad = [name for name in layers if name not in LAYERS]
        if bad:
            raise UsageError(f"unknown layer(s): {', '.join(bad)}")
        svg = render_svg(read_spec(args.spec).triangle(), layers)
        if args.out == "-":
            sys.stdout.write(svg)
        else:
            Path(args.out).write_text(svg, encoding="utf-8")
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(f"brocard: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegenerateSpec as exc:
        print(f"brocard: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except SpecError as exc:
        print(f"brocard: bad input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(f"brocard: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except Exception as exc:  # noqa: BLE001
        print(f"brocard: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
