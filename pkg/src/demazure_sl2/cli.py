"""Command line entry points.

Subcommands:

  dist        compute one weight distribution, emit CSV or JSON
  verify      run an identity suite, one PASS/FAIL line per identity per N
  wlln        rescaled summaries along a word family, CSV
  conjecture  cubic fit of the degree variance at level 2-4, JSON report
  render      SVG heatmap, degree histogram or covariance ellipse

Exit status: 0 on success (and all identities passing), 1 when a
verification fails, 2 for usage errors.  All configuration comes from
flags; there are no config files or environment variables.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .asymptotics import FitMismatchError, conjecture_check, wlln_series
from .demazure import WeylWord, weight_distribution
from .lattice import HighestWeight, degree_functional, finite_weight_functional
from .moments import covariance_matrix, expectation
from .render import (
    DegenerateCovarianceError,
    Ellipse,
    degree_histogram,
    ellipse_document,
    heatmap,
)
from .serialize import (
    conjecture_json,
    distribution_csv,
    distribution_json,
    wlln_csv,
)
from .verify import SUITE_NAMES, format_check, run_suite


@dataclass
class RunConfig:
    """Fully resolved invocation; one field per flag that matters."""

    command: str
    m: int = 1
    n: int = 0
    length: int = 1
    first: int = 0
    fmt: str = "csv"
    out: str | None = None
    suite: str = "all"
    max_n: int = 20
    n_list: list[int] = field(default_factory=list)
    kind: str = "heatmap"
    samples: int = 64


def _parse_n_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}") from err


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demazure-sl2",
        description="Exact weight distributions of affine sl2 Demazure modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_hw(p: argparse.ArgumentParser) -> None:
        p.add_argument("--m", type=int, required=True, help="coefficient of the first fundamental weight")
        p.add_argument("--n", type=int, required=True, help="coefficient of the second fundamental weight")

    p = sub.add_parser("dist", help="compute one weight distribution")
    add_hw(p)
    p.add_argument("--N", dest="length", type=int, required=True, help="word length")
    p.add_argument("--first", type=int, choices=(0, 1), default=0, help="rightmost letter, applied first")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.add_argument("--max-N", dest="max_n", type=int, default=20)

    p = sub.add_parser("wlln", help="rescaled summaries along a word family")
    add_hw(p)
    p.add_argument("--N-list", dest="n_list", type=_parse_n_list, required=True,
                   help="comma separated, strictly increasing word lengths")
    p.add_argument("--first", type=int, choices=(0, 1), default=0)
    p.add_argument("--out", default=None)

    p = sub.add_parser("conjecture", help="cubic fit of the degree variance, levels 2-4")
    p.add_argument("--m", type=int, required=True, help="level (2, 3 or 4); highest weight is m*L0")
    p.add_argument("--N-list", dest="n_list", type=_parse_n_list, default=[2, 4, 6, 8, 10],
                   help="comma separated even word lengths, at least 5")
    p.add_argument("--out", default=None)

    p = sub.add_parser("render", help="emit an SVG view of one distribution")
    add_hw(p)
    p.add_argument("--N", dest="length", type=int, required=True)
    p.add_argument("--first", type=int, choices=(0, 1), default=0)
    p.add_argument("--kind", choices=("heatmap", "histogram", "ellipse"), default="heatmap")
    p.add_argument("--samples", type=int, default=64, help="ellipse polyline vertex count")
    p.add_argument("--out", default=None)

    return parser


def _emit(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_dist(cfg: RunConfig) -> int:
    hw = HighestWeight(cfg.m, cfg.n)
    word = WeylWord(cfg.length, cfg.first)
    mu = weight_distribution(hw, word)
    text = distribution_json(mu, word) if cfg.fmt == "json" else distribution_csv(mu)
    _emit(cfg.out, text)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    results = run_suite(cfg.suite, cfg.max_n)
    for r in results:
        print(format_check(r))
    failed = sum(1 for r in results if not r.passed)
    print(f"checked {len(results)} identities: {len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


def cmd_wlln(cfg: RunConfig) -> int:
    hw = HighestWeight(cfg.m, cfg.n)
    summaries = wlln_series(hw, cfg.n_list, cfg.first)
    _emit(cfg.out, wlln_csv(summaries))
    return 0


def cmd_conjecture(cfg: RunConfig) -> int:
    try:
        report = conjecture_check(cfg.m, cfg.n_list)
    except FitMismatchError as err:
        print(f"error: {err}", file=sys.stderr)
        for n, got, predicted in err.witnesses:
            print(f"  N={n} computed={got} cubic-predicts={predicted}", file=sys.stderr)
        return 1
    _emit(cfg.out, conjecture_json(report))
    return 0 if report.table_match and report.max_degree_match else 1


def cmd_render(cfg: RunConfig) -> int:
    hw = HighestWeight(cfg.m, cfg.n)
    word = WeylWord(cfg.length, cfg.first)
    mu = weight_distribution(hw, word)
    if cfg.kind == "heatmap":
        text = heatmap(mu)
    elif cfg.kind == "histogram":
        text = degree_histogram(mu)
    else:
        center = (
            expectation(mu, degree_functional()),
            expectation(mu, finite_weight_functional(hw)),
        )
        text = ellipse_document(Ellipse(center, covariance_matrix(mu)), cfg.samples)
    _emit(cfg.out, text)
    return 0


_HANDLERS = {
    "dist": cmd_dist,
    "verify": cmd_verify,
    "wlln": cmd_wlln,
    "conjecture": cmd_conjecture,
    "render": cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(command=args.command)
    for name in vars(args):
        if hasattr(cfg, name):
            setattr(cfg, name, getattr(args, name))
    try:
        return _HANDLERS[cfg.command](cfg)
    except FitMismatchError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except DegenerateCovarianceError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
