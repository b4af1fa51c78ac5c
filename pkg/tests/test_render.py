import re
from fractions import Fraction

import pytest

from demazure_sl2 import (
    CovarianceMatrix,
    DegenerateCovarianceError,
    Ellipse,
    HighestWeight,
    WeightDistribution,
    WeylWord,
    degree_histogram,
    ellipse_path,
    heatmap,
    level1_distribution,
    weight_distribution,
)
from demazure_sl2.render import RenderOptions, ellipse_document

L0 = HighestWeight.fundamental(0)


@pytest.fixture(scope="module")
def mu6():
    return weight_distribution(L0, WeylWord(6, 0))


def test_heatmap_cells_and_determinism(mu6):
    svg = heatmap(mu6)
    assert svg == heatmap(mu6)
    # equal distributions from different routes render to identical bytes
    assert svg == heatmap(level1_distribution(6))
    assert svg.count("<rect") == 42
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")


def test_heatmap_shading_darkest_at_max(mu6):
    svg = heatmap(mu6)
    cells = re.findall(r'<rect[^>]*fill="rgb\((\d+),\d+,\d+\)"[^>]*data-mult="(\d+)"', svg)
    assert len(cells) == 42
    grays = {}
    for gray, mult in cells:
        grays.setdefault(int(mult), set()).add(int(gray))
    # shade depends only on the multiplicity, darkest at the maximum
    assert all(len(v) == 1 for v in grays.values())
    assert min(grays) == 1 and max(grays) == 3
    assert grays[3] == {RenderOptions().dark_gray}
    assert sum(1 for _, mult in cells if mult == "3") == 6
    g1, g2, g3 = (grays[k].pop() for k in (1, 2, 3))
    assert g1 > g2 > g3


def test_heatmap_geometry(mu6):
    svg = heatmap(mu6)
    opt = RenderOptions()
    # (a, b) = (0, 0) has a - b = 0 and the leftmost column is a - b = -3
    m = re.search(r'<rect x="([\d.]+)" y="([\d.]+)"[^>]*data-a="0" data-b="0"', svg)
    assert m is not None
    assert float(m.group(1)) == opt.padding + 3 * opt.cell_size
    assert float(m.group(2)) == opt.padding


def test_heatmap_empty_distribution():
    svg = heatmap(WeightDistribution(L0, {}))
    assert "<rect" not in svg
    assert svg == heatmap(WeightDistribution(L0, {}))


def test_ellipse_path_points_lie_on_quadric():
    sigma = CovarianceMatrix(Fraction(85, 16), Fraction(0), Fraction(6))
    path = ellipse_path(Ellipse((0, 0), sigma), samples=128)
    assert path.startswith('<path d="M ')
    assert path.endswith('/>')
    assert path.count("Z") == 1
    pts = re.findall(r"[ML] (-?[\d.]+) (-?[\d.]+)", path)
    assert len(pts) == 128
    s11, s22 = 85 / 16, 6.0
    for xs, ys in pts:
        x, y = float(xs), float(ys)
        q = x * x / s11 + y * y / s22
        assert abs(q - 1.0) < 1e-9
    # semi-axes are reached
    assert max(abs(float(x)) for x, _ in pts) == pytest.approx((85 / 16) ** 0.5, abs=1e-9)
    assert max(abs(float(y)) for _, y in pts) == pytest.approx(6**0.5, abs=1e-6)


def test_ellipse_path_with_cross_term():
    sigma = CovarianceMatrix(Fraction(35, 8), Fraction(5, 2), Fraction(5))
    center = (Fraction(7, 2), Fraction(1))
    path = ellipse_path(Ellipse(center, sigma), samples=64)
    pts = [(float(x), float(y)) for x, y in re.findall(r"[ML] (-?[\d.]+) (-?[\d.]+)", path)]
    det = float(sigma.determinant())
    i11, i12, i22 = 5 / det, -2.5 / det, (35 / 8) / det
    for x, y in pts:
        dx, dy = x - 3.5, y - 1.0
        q = i11 * dx * dx + 2 * i12 * dx * dy + i22 * dy * dy
        assert abs(q - 1.0) < 1e-9
    assert path == ellipse_path(Ellipse(center, sigma), samples=64)


def test_ellipse_path_rejects_degenerate_matrix():
    # determinant exactly zero
    sigma = CovarianceMatrix(Fraction(1, 4), Fraction(1, 2), Fraction(1))
    with pytest.raises(DegenerateCovarianceError):
        ellipse_path(Ellipse((0, 0), sigma))
    with pytest.raises(DegenerateCovarianceError):
        ellipse_path(Ellipse((0, 0), CovarianceMatrix(Fraction(0), Fraction(0), Fraction(1))))
    with pytest.raises(ValueError):
        ellipse_path(Ellipse((0, 0), CovarianceMatrix(Fraction(1), Fraction(0), Fraction(1))), samples=0)


def test_ellipse_document_wraps_path():
    sigma = CovarianceMatrix(Fraction(4), Fraction(0), Fraction(1))
    doc = ellipse_document(Ellipse((10, -2), sigma), samples=16)
    assert doc.startswith("<svg ")
    assert "<path " in doc and doc.endswith("</svg>\n")
    with pytest.raises(DegenerateCovarianceError):
        ellipse_document(Ellipse((0, 0), CovarianceMatrix(Fraction(1), Fraction(1), Fraction(1))))


def test_degree_histogram(mu6):
    svg = degree_histogram(mu6)
    bars = re.findall(r'data-degree="(\d+)" data-mass="(\d+)"', svg)
    assert [int(d) for d, _ in bars] == list(range(10))
    masses = {int(d): int(c) for d, c in bars}
    assert sum(masses.values()) == 64
    assert masses == {0: 1, 1: 3, 2: 4, 3: 7, 4: 9, 5: 11, 6: 9, 7: 8, 8: 5, 9: 7}
    # tallest bar is the full plot height
    m = re.search(r'height="([\d.]+)"[^>]*data-degree="5"', svg)
    assert float(m.group(1)) == RenderOptions().plot_height
    assert svg == degree_histogram(mu6)
