from fractions import Fraction

import pytest

from demazure_sl2 import (
    CheckResult,
    CovarianceMatrix,
    HighestWeight,
    WeylWord,
    format_check,
    run_suite,
    theorem_covariance_matrix,
    weight_distribution,
)
from demazure_sl2.verify import SUITE_NAMES, SuiteContext


def test_theorem_covariance_matrix_values():
    assert theorem_covariance_matrix(1, 0) == CovarianceMatrix(
        Fraction(1, 4), Fraction(1, 2), Fraction(1)
    )
    assert theorem_covariance_matrix(5, 0) == CovarianceMatrix(
        Fraction(35, 8), Fraction(5, 2), Fraction(5)
    )
    assert theorem_covariance_matrix(6, 0) == CovarianceMatrix(
        Fraction(85, 16), Fraction(0), Fraction(6)
    )
    # parity match flips with the generator index
    assert theorem_covariance_matrix(5, 1).covariance == 0
    assert theorem_covariance_matrix(6, 1).covariance == 3
    with pytest.raises(ValueError):
        theorem_covariance_matrix(0, 0)
    with pytest.raises(ValueError):
        theorem_covariance_matrix(3, 2)


def test_format_check_lines():
    ok = CheckResult("sanderson", "var-weight-diff", 4, "1", "1", True)
    bad = CheckResult("stretch", "stretch-cov", 7, "3/2", "5/2", False)
    assert format_check(ok) == "PASS var-weight-diff N=4 lhs=1 rhs=1"
    assert format_check(bad) == "FAIL stretch-cov N=7 lhs=3/2 rhs=5/2"


def test_every_suite_passes_at_small_depth():
    ctx = SuiteContext()
    for name in SUITE_NAMES:
        results = run_suite(name, 8, ctx)
        assert results, name
        assert all(r.passed for r in results), [r for r in results if not r.passed]
        assert all(r.suite == name for r in results)


def test_run_all_concatenates_in_order():
    results = run_suite("all", 4)
    seen = [r.suite for r in results]
    # suite blocks appear in declaration order
    order = [s for s in SUITE_NAMES for _ in range(seen.count(s))]
    assert seen == order
    assert all(r.passed for r in results)


def test_run_suite_validation():
    with pytest.raises(ValueError):
        run_suite("nope", 5)
    with pytest.raises(ValueError):
        run_suite("all", 0)


def test_suite_context_caches_and_extends_chains():
    ctx = SuiteContext()
    hw = HighestWeight.fundamental(0)
    c5 = ctx.chain(hw, 0, 5)
    assert len(c5) == 6
    c9 = ctx.chain(hw, 0, 9)
    assert c9 is c5 and len(c9) == 10
    for t in (0, 3, 7):
        assert c9[t] == weight_distribution(hw, WeylWord(t, 0))
    mass, table = ctx.moments(hw, 0, 4, 2)
    assert mass == 16
    assert table[(0, 0)] == 16
    assert ctx.moments(hw, 0, 4, 2) is not None
