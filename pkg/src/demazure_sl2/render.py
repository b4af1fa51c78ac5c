"""Deterministic SVG views of weight distributions.

Heatmaps use the (a - b, a) plane with the degree axis pointing down, one
square cell per support point, shaded by log(1 + mult) relative to the
largest multiplicity.  Covariance ellipses are emitted as closed polylines
sampled from the Cholesky image of the unit circle, so every vertex lies
on the 1-sigma quadric of the matrix.  Output is plain SVG 1.1 text with
fixed-precision coordinates; equal inputs render to identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .demazure import WeightDistribution
from .lattice import Scalar
from .moments import CovarianceMatrix


class DegenerateCovarianceError(ValueError):
    """Covariance matrix is not positive definite."""


@dataclass(frozen=True)
class Ellipse:
    """1-sigma ellipse of a covariance matrix, centered at ``center``.

    The matrix must be positive definite for a path to exist;
    ellipse_path raises DegenerateCovarianceError otherwise.
    """

    center: tuple[Scalar, Scalar]
    matrix: CovarianceMatrix


@dataclass(frozen=True)
class RenderOptions:
    cell_size: int = 16
    padding: int = 8
    plot_height: int = 200
    light_gray: int = 235
    dark_gray: int = 32


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def heatmap(mu: WeightDistribution, options: RenderOptions | None = None) -> str:
    """One shaded cell per support point in the (a - b, a) plane."""
    opt = options or RenderOptions()
    cells = mu.sorted_items()
    if not cells:
        return _svg(2 * opt.padding, 2 * opt.padding, [])
    ds = [a - b for (a, b), _ in cells]
    heights = [a for (a, _), _ in cells]
    d_min, d_max = min(ds), max(ds)
    a_min, a_max = min(heights), max(heights)
    max_mult = max(c for _, c in cells)
    log_max = math.log1p(max_mult)
    body = []
    for (a, b), c in cells:
        ratio = math.log1p(c) / log_max if log_max else 1.0
        gray = opt.light_gray - round(ratio * (opt.light_gray - opt.dark_gray))
        x = opt.padding + ((a - b) - d_min) * opt.cell_size
        y = opt.padding + (a - a_min) * opt.cell_size
        body.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" '
            f'width="{_fmt(opt.cell_size)}" height="{_fmt(opt.cell_size)}" '
            f'fill="rgb({gray},{gray},{gray})" '
            f'data-a="{a}" data-b="{b}" data-mult="{c}"/>'
        )
    width = 2 * opt.padding + (d_max - d_min + 1) * opt.cell_size
    height = 2 * opt.padding + (a_max - a_min + 1) * opt.cell_size
    return _svg(width, height, body)


def ellipse_path(e: Ellipse, samples: int = 64) -> str:
    """SVG path element tracing the 1-sigma ellipse as a closed polyline.

    Vertices are the Cholesky image of equally spaced points on the unit
    circle; each satisfies (p - center)^T Sigma^{-1} (p - center) = 1 up to
    floating-point formatting.
    """
    if not isinstance(samples, int) or samples < 1:
        raise ValueError("samples must be a positive integer")
    s11 = Fraction(e.matrix.var_degree)
    s12 = Fraction(e.matrix.covariance)
    det = e.matrix.determinant()
    if s11 <= 0 or det <= 0:
        raise DegenerateCovarianceError("degenerate covariance")
    l11 = math.sqrt(s11)
    l21 = float(s12) / l11
    l22 = math.sqrt(det / s11)
    cx, cy = float(e.center[0]), float(e.center[1])
    pieces = []
    for t in range(samples):
        theta = 2.0 * math.pi * t / samples
        u, v = math.cos(theta), math.sin(theta)
        x = cx + l11 * u
        y = cy + l21 * u + l22 * v
        cmd = "M" if t == 0 else "L"
        pieces.append(f"{cmd} {x:.12f} {y:.12f}")
    pieces.append("Z")
    return f'<path d="{" ".join(pieces)}" fill="none" stroke="black"/>'


def ellipse_document(e: Ellipse, samples: int = 64, margin: float = 1.0) -> str:
    """Standalone SVG document containing the ellipse path.

    The viewBox is the bounding box of the ellipse plus ``margin`` on every
    side, so the path is visible without any external transform.
    """
    s11 = Fraction(e.matrix.var_degree)
    s22 = Fraction(e.matrix.var_finite_weight)
    det = e.matrix.determinant()
    if s11 <= 0 or det <= 0:
        raise DegenerateCovarianceError("degenerate covariance")
    path = ellipse_path(e, samples)
    rx = math.sqrt(s11)
    ry = math.sqrt(s22)
    cx, cy = float(e.center[0]), float(e.center[1])
    x0, y0 = cx - rx - margin, cy - ry - margin
    w, h = 2 * (rx + margin), 2 * (ry + margin)
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
    )
    return "\n".join([head, path, "</svg>"]) + "\n"


def degree_histogram(mu: WeightDistribution, options: RenderOptions | None = None) -> str:
    """Bar chart of total mass per degree, degrees left to right."""
    opt = options or RenderOptions()
    totals: dict[int, int] = {}
    for (a, _), c in mu.items():
        totals[a] = totals.get(a, 0) + c
    if not totals:
        return _svg(2 * opt.padding, 2 * opt.padding, [])
    degrees = sorted(totals)
    a_min, a_max = degrees[0], degrees[-1]
    max_mass = max(totals.values())
    body = []
    for a in degrees:
        mass = totals[a]
        h = opt.plot_height * mass / max_mass
        x = opt.padding + (a - a_min) * opt.cell_size
        y = opt.padding + opt.plot_height - h
        body.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" '
            f'width="{_fmt(opt.cell_size)}" height="{_fmt(h)}" '
            f'fill="rgb(96,96,96)" data-degree="{a}" data-mass="{mass}"/>'
        )
    width = 2 * opt.padding + (a_max - a_min + 1) * opt.cell_size
    height = 2 * opt.padding + opt.plot_height
    return _svg(width, height, body)
