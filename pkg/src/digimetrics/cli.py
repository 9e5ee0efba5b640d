"""Command-line front end.

    digimetrics dist --metric hausdorff --p 1 A.grid B.grid
    digimetrics dist --metric hausdorff-path --u 1 --ambient B.grid B.grid C.grid
    digimetrics gen square-snake --n 6 --out S.grid
    digimetrics verify-paper

Exit codes: 0 success, 1 unreadable or malformed input, 2 semantic error
(containment, invalid parameters), 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .continuity import DEFAULT_BUDGET, BudgetExceeded, continuity_metric
from .fileio import FormatError, can_render_grid, read_image, render_coords, render_grid
from .lattice import ImageError
from .metrics import (
    DiamDiffLp,
    DiamDiffPath,
    EulerDiff,
    HausdorffLp,
    HausdorffPath,
    Lp,
    PathMetric,
    WeightedSum,
    diameter,
    eval_pseudometric,
)
from .shapes import FAMILIES, PAIRS, ShapeSpec
from .verify import format_value, run_verification

EXIT_OK, EXIT_INPUT, EXIT_SEMANTIC, EXIT_BUDGET = 0, 1, 2, 3

LEAF_METRICS = ("hausdorff", "hausdorff-path", "diam-diff", "diam-diff-path", "euler-diff")
METRICS = LEAF_METRICS + ("diam", "continuity", "sum")


class UsageError(Exception):
    pass


def _number(text: str):
    value = float(text)
    return int(value) if value.is_integer() else value


def _leaf_spec(name: str, args, ambient):
    if name == "hausdorff":
        return HausdorffLp(args.p)
    if name == "hausdorff-path":
        if ambient is None:
            raise UsageError("hausdorff-path needs --ambient")
        return HausdorffPath(ambient)
    if name == "diam-diff":
        return DiamDiffLp(args.p)
    if name == "diam-diff-path":
        return DiamDiffPath(ambient, None if ambient is not None else args.u)
    if name == "euler-diff":
        return EulerDiff()
    raise UsageError(f"unknown metric {name!r}")


def _sum_spec(terms: List[str], args, ambient) -> WeightedSum:
    if not terms:
        raise UsageError("--metric sum needs at least one --term WEIGHT:METRIC")
    parsed = []
    for term in terms:
        weight, sep, name = term.partition(":")
        if not sep:
            raise UsageError(f"bad --term {term!r}; expected WEIGHT:METRIC")
        try:
            w = _number(weight)
        except ValueError:
            raise UsageError(f"bad weight in --term {term!r}") from None
        parsed.append((w, _leaf_spec(name, args, ambient)))
    return WeightedSum(tuple(parsed))


def cmd_dist(args) -> int:
    A = read_image(args.a, args.format, args.u)
    B = read_image(args.b, args.format, args.u)
    ambient = read_image(args.ambient, args.format, args.u) if args.ambient else None
    if args.metric == "continuity":
        value = continuity_metric(A, B, args.p, args.budget).value
    elif args.metric == "diam":
        metric = Lp(args.p) if ambient is None else PathMetric(ambient)
        value = max(diameter(A, metric), diameter(B, metric))
    elif args.metric == "sum":
        value = eval_pseudometric(_sum_spec(args.term, args, ambient), A, B)
    else:
        value = eval_pseudometric(_leaf_spec(args.metric, args, ambient), A, B)
    print(format_value(value))
    return EXIT_OK


def _render(image, fmt: str) -> str:
    if fmt == "auto":
        fmt = "grid" if can_render_grid(image) else "coords"
    return render_grid(image) if fmt == "grid" else render_coords(image)


def _suffix(image, fmt: str) -> str:
    if fmt == "auto":
        fmt = "grid" if can_render_grid(image) else "coords"
    return ".grid" if fmt == "grid" else ".txt"


def cmd_gen(args) -> int:
    if args.family in PAIRS:
        parts = [(label, ShapeSpec(fam, args.n, args.u).build()) for label, fam in PAIRS[args.family]]
        if args.out is None:
            print("\n".join(f"{label}:\n{_render(img, args.format)}" for label, img in parts), end="")
            return EXIT_OK
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for label, img in parts:
            (outdir / f"{label}{_suffix(img, args.format)}").write_text(_render(img, args.format))
        return EXIT_OK
    image = ShapeSpec(args.family, args.n, args.u).build()
    text = _render(image, args.format)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    snake_ns = args.snake_n or ([args.n] if args.n else [6, 4])
    rect_n = args.rect_n or args.n or 5
    annulus_n = args.annulus_n or args.n or 2
    rows = run_verification(
        snake_ns=snake_ns,
        rect_n=rect_n,
        annulus_n=annulus_n,
        samples=args.samples,
        seed=args.seed,
        budget=args.budget,
        corrupt=args.corrupt,
    )
    for row in rows:
        print(row.line())
    failed = sum(row.status == "FAIL" for row in rows)
    skipped = sum(row.status == "SKIPPED" for row in rows)
    print(f"# {len(rows) - failed - skipped} passed, {failed} failed, {skipped} skipped")
    return EXIT_OK if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="digimetrics", description="Metrics on digital images.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="distance between two image files")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("--metric", choices=METRICS, default="hausdorff")
    d.add_argument("--p", type=_number, default=1, help="l_p exponent (default 1)")
    d.add_argument("--u", type=int, default=1, help="c_u adjacency (default 1)")
    d.add_argument("--ambient", help="ambient image for path-based metrics")
    d.add_argument("--format", choices=("grid", "coords"), help="default: by file suffix")
    d.add_argument("--term", action="append", default=[], help="WEIGHT:METRIC for --metric sum")
    d.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    d.set_defaults(func=cmd_dist)

    g = sub.add_parser("gen", help="write one of the named shapes")
    g.add_argument("family", choices=sorted(FAMILIES) + sorted(PAIRS))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--u", type=int, default=1)
    g.add_argument("--out", help="output file; a directory for pair families")
    g.add_argument("--format", choices=("auto", "grid", "coords"), default="auto")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify-paper", help="check the worked examples and inequalities")
    v.add_argument("--n", type=int, help="use this n for every family")
    v.add_argument("--snake-n", type=int, action="append")
    v.add_argument("--rect-n", type=int)
    v.add_argument("--annulus-n", type=int)
    v.add_argument("--samples", type=int, default=100, help="random cases per property row (0 to skip)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--corrupt", action="append", default=[], metavar="CLAIM_ID",
                   help="shift a claim's expected value (harness self-test)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: search budget exceeded ({exc})", file=sys.stderr)
        return EXIT_BUDGET
    except (ImageError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC

