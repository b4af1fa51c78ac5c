"""Exact moments of weight distributions.

All statistics are rationals computed with fractions.Fraction; nothing in
this module touches floating point.  Expectations of polynomial
functionals in the lattice coordinates reduce to the raw power sums
sum(mass * a^i * b^j), which are collected in a single pass per
distribution (see raw_moments).  Covariances and the degree/finite-weight
covariance matrix are assembled from those sums, and reference_formula
exposes the catalog of closed-form values the identity suites compare
against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .demazure import WeightDistribution
from .lattice import (
    Functional,
    Scalar,
    degree_functional,
    finite_weight_functional,
)


class EmptyDistributionError(ValueError):
    """Moment of a distribution with zero total mass."""


def raw_moments(mu: WeightDistribution, degree: int) -> tuple[int, dict[tuple[int, int], int]]:
    """Total mass and the power sums sum(c * a^i * b^j) for i + j <= degree."""
    keys = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    sums = dict.fromkeys(keys, 0)
    for (a, b), c in mu.items():
        pa = [1]
        pb = [1]
        for _ in range(degree):
            pa.append(pa[-1] * a)
            pb.append(pb[-1] * b)
        for key in keys:
            sums[key] += c * pa[key[0]] * pb[key[1]]
    return sums[(0, 0)], sums


def _expect_from(table: dict[tuple[int, int], int], mass: int, f: Functional) -> Fraction:
    if mass == 0:
        raise EmptyDistributionError("empty distribution")
    acc: Scalar = 0
    for (i, j), c in f.terms():
        acc += c * table[(i, j)]
    return Fraction(acc, mass)


def expectation(mu: WeightDistribution, f: Functional) -> Fraction:
    """Mean of f under mu, an exact rational.  Raises on zero total mass."""
    mass, table = raw_moments(mu, f.total_degree)
    return _expect_from(table, mass, f)


def covariance(mu: WeightDistribution, f: Functional, g: Functional) -> Fraction:
    """E[fg] - E[f]E[g] under mu, exact."""
    mass, table = raw_moments(mu, f.total_degree + g.total_degree)
    return _expect_from(table, mass, f * g) - _expect_from(table, mass, f) * _expect_from(table, mass, g)


def variance(mu: WeightDistribution, f: Functional) -> Fraction:
    return covariance(mu, f, f)


@dataclass(frozen=True)
class CovarianceMatrix:
    """Symmetric 2x2 covariance of (degree, finite weight), exact rationals."""

    var_degree: Fraction
    covariance: Fraction
    var_finite_weight: Fraction

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.var_degree, self.covariance), (self.covariance, self.var_finite_weight))

    def determinant(self) -> Fraction:
        return self.var_degree * self.var_finite_weight - self.covariance * self.covariance


def covariance_matrix(mu: WeightDistribution) -> CovarianceMatrix:
    """Covariance matrix of the pair (degree, finite weight) under mu."""
    mass, table = raw_moments(mu, 2)
    d = degree_functional()
    w = finite_weight_functional(mu.hw)
    ed = _expect_from(table, mass, d)
    ew = _expect_from(table, mass, w)
    return CovarianceMatrix(
        var_degree=_expect_from(table, mass, d * d) - ed * ed,
        covariance=_expect_from(table, mass, d * w) - ed * ew,
        var_finite_weight=_expect_from(table, mass, w * w) - ew * ew,
    )


@dataclass(frozen=True)
class CoordinateMap:
    """Pair of functionals (x, y) used to push a distribution forward."""

    x: Functional
    y: Functional

    def apply(self, p) -> tuple[Scalar, Scalar]:
        return (self.x.evaluate(p), self.y.evaluate(p))


def pushforward(mu: WeightDistribution, cmap: CoordinateMap) -> dict[tuple[Scalar, Scalar], int]:
    """Image measure of mu under the coordinate map; cancels to 0 are dropped."""
    out: dict[tuple[Scalar, Scalar], int] = {}
    for p, c in mu.items():
        key = cmap.apply(p)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def coordinate_expectation(measure: Mapping[tuple[Scalar, Scalar], int], axis: int) -> Fraction:
    """Mean of one coordinate of a pushed measure."""
    mass = sum(measure.values())
    if mass == 0:
        raise EmptyDistributionError("empty distribution")
    return Fraction(sum(c * key[axis] for key, c in measure.items()), mass)


def coordinate_covariance(measure: Mapping[tuple[Scalar, Scalar], int]) -> Fraction:
    """Covariance of the two coordinates of a pushed measure."""
    mass = sum(measure.values())
    if mass == 0:
        raise EmptyDistributionError("empty distribution")
    sx = sum(c * k[0] for k, c in measure.items())
    sy = sum(c * k[1] for k, c in measure.items())
    sxy = sum(c * k[0] * k[1] for k, c in measure.items())
    return Fraction(sxy, mass) - Fraction(sx, mass) * Fraction(sy, mass)


# Closed-form catalog.  Each entry: parity domain ("any"/"even"/"odd") and
# the value as a function of the word length N.  All are for level 1,
# hw = L0, word (N, first=0), in the (a, b) coordinates of lattice.py:
#
#   var_degree                    Var(a) for even N and Var(b) for odd N
#   stretch_covariance            Cov(b, (a-b)^2) odd N / Cov(a, (a-b)^2) even N
#   second_moment_increment_odd   E_{N+1}[a^2] - E_N[a^2] - 2*stretch_covariance
#   second_moment_increment_even  E_{N+1}[b^2] - E_N[b^2] - 2*stretch_covariance
#   cross_moment_increment_odd    E_{N+1}[a^2] - E_N[b^2]
#   cross_moment_increment_even   E_{N+1}[b^2] - E_N[a^2]
#   second_moment_a_even          E_N[a^2]
#   second_moment_b_odd           E_N[b^2]
#   expected_degree_even          E_N[a]
#   expected_b_odd                E_N[b]
_FORMULAS: dict[str, tuple[str, Callable[[int], Fraction]]] = {
    "var_degree": ("any", lambda N: Fraction(N * (N - 1) * (2 * N + 5), 96)),
    "stretch_covariance": ("any", lambda N: Fraction(N * (N - 1), 16)),
    "second_moment_increment_odd": ("odd", lambda N: Fraction(N * N * (N + 3), 16)),
    "second_moment_increment_even": ("even", lambda N: Fraction(N * (N * N + 3 * N - 2), 16)),
    "cross_moment_increment_odd": ("odd", lambda N: Fraction(N * (N + 2) * (N + 3), 16)),
    "cross_moment_increment_even": ("even", lambda N: Fraction(N * (N + 1) * (N + 2), 16)),
    "second_moment_a_even": ("even", lambda N: Fraction(N * (3 * N**3 + 10 * N * N + 9 * N - 10), 192)),
    "second_moment_b_odd": ("odd", lambda N: Fraction((N - 1) * (3 * N**3 + 13 * N * N + 10 * N - 12), 192)),
    "expected_degree_even": ("even", lambda N: Fraction(N * (N + 1), 8)),
    "expected_b_odd": ("odd", lambda N: Fraction((N - 1) * (N + 2), 8)),
}


def reference_formula(name: str, N: int) -> Fraction:
    """Closed-form value of a named statistic at word length N.

    Unknown names and parity violations (an *_odd entry at even N and vice
    versa) raise ValueError.
    """
    if name not in _FORMULAS:
        raise ValueError(f"unknown reference formula {name!r}")
    if not isinstance(N, int) or N < 1:
        raise ValueError("word length must be a positive integer")
    parity, fn = _FORMULAS[name]
    if parity == "odd" and N % 2 == 0:
        raise ValueError(f"parity violation: {name!r} requires odd N, got {N}")
    if parity == "even" and N % 2 == 1:
        raise ValueError(f"parity violation: {name!r} requires even N, got {N}")
    return fn(N)


def reference_formula_names() -> tuple[str, ...]:
    return tuple(sorted(_FORMULAS))
