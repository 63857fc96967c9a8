from __future__ import annotations

import math

import pytest
from sympy import primerange

from frlab.const.const import COVERING_EXPONENT
from frlab.exceptions.exceptions import (
    InstanceTooLargeError,
    InvalidResidueError,
    SearchBudgetExhaustedError,
)
from frlab.functions.modarith import build_prime_context, factorial_table
from frlab.functions.representation import (
    build_factorial_index,
    covering_scale,
    covering_window_length,
    exact_minimal_max,
    exponent_trend,
    find_representation,
    find_representations,
    minimal_bound_for_all,
)
from frlab.models.prime_context import PrimeContext
from frlab.models.representation import RepresentationResult


def test_factorial_index_examples(ctx7: PrimeContext, ctx11: PrimeContext) -> None:
    assert build_factorial_index(ctx7, 6).index == {1: 1, 2: 2, 6: 3, 3: 4}
    assert build_factorial_index(ctx11, 3).index == {1: 1, 2: 2, 6: 3}
    assert build_factorial_index(ctx11, 1).index == {1: 1}
    with pytest.raises(InvalidResidueError):
        build_factorial_index(ctx7, 7)


def test_factorial_index_keeps_smallest_argument(ctx101: PrimeContext) -> None:
    table = factorial_table(ctx101, 100)
    index = build_factorial_index(ctx101, 100)
    for value, n in index.index.items():
        assert table[n] == value
        assert all(table[m] != value for m in range(1, n))


def test_representation_examples(ctx7: PrimeContext) -> None:
    assert find_representation(ctx7, 1, 1).args == (1, 1, 1, 1, 1, 1, 1)
    assert find_representation(ctx7, 6, 3).args == (1, 1, 1, 1, 1, 1, 3)
    assert find_representation(ctx7, 4, 2).args == (1, 1, 1, 1, 1, 2, 2)


def test_representation_absent_below_cover(ctx7: PrimeContext) -> None:
    assert find_representation(ctx7, 3, 2) is None


def test_representation_result_checks_product(ctx7: PrimeContext) -> None:
    with pytest.raises(InvalidResidueError):
        RepresentationResult(ctx7, 5, (1, 1, 1, 1, 1, 1, 3))


def test_search_budget(ctx101: PrimeContext) -> None:
    with pytest.raises(SearchBudgetExhaustedError) as raised:
        find_representation(ctx101, 97, 100, budget=0)
    assert raised.value.lambda_value == 97


def test_zero_lambda_rejected(ctx7: PrimeContext) -> None:
    with pytest.raises(InvalidResidueError):
        find_representation(ctx7, 14, 6)


def test_minimal_bound_for_seven(ctx7: PrimeContext) -> None:
    report = minimal_bound_for_all(ctx7)
    assert report.B_star == 3
    assert report.coverage[0] == pytest.approx(1 / 6)
    assert report.coverage[-1] == 1.0
    assert report.first_bound[1] == 1
    assert report.first_bound[4] == 2


def test_search_agrees_with_coverage(ctx101: PrimeContext) -> None:
    report = minimal_bound_for_all(ctx101)
    assert report.B_star is not None
    found = find_representations(ctx101, range(1, 101), report.B_star)
    assert all(result is not None and result.max_arg <= report.B_star for result in found.values())
    for lam, first in report.first_bound.items():
        assert found[lam] is not None
        assert found[lam].max_arg >= first
    for lam in list(report.first_bound)[:5]:
        assert exact_minimal_max(ctx101, lam) == report.first_bound[lam]


def test_exact_minimal_max_limits() -> None:
    with pytest.raises(InstanceTooLargeError):
        exact_minimal_max(build_prime_context(211), 2)


@pytest.mark.slow
@pytest.mark.parametrize("p", list(primerange(53, 500)))
def test_every_residue_is_represented(p: int) -> None:
    ctx = build_prime_context(p)
    report = minimal_bound_for_all(ctx)
    assert report.B_star is not None
    found = find_representations(ctx, range(1, p), report.B_star)
    assert all(result is not None for result in found.values())


@pytest.mark.slow
@pytest.mark.parametrize("p", list(primerange(5, 200)))
def test_search_matches_coverage_below_cover(p: int) -> None:
    ctx = build_prime_context(p)
    report = minimal_bound_for_all(ctx)
    for B in range(1, report.B_star or p):
        found = find_representations(ctx, range(1, p), B)
        for lam, result in found.items():
            covered = report.first_bound.get(lam, p) <= B
            assert (result is not None) == covered, (p, B, lam)


def test_exponent_trend_synthetic() -> None:
    primes = [101, 211, 307, 401, 499]
    exact = exponent_trend([(p, p**COVERING_EXPONENT) for p in primes])
    assert exact.exponent == pytest.approx(11 / 12)
    assert exact.ratios[0] == pytest.approx(math.sqrt(math.log(101)))
    flat = exponent_trend([(p, 7.0) for p in primes])
    assert flat.exponent == pytest.approx(0, abs=1e-9)
    with pytest.raises(InvalidResidueError):
        exponent_trend([(101, 3.0), (103, 3.0)])


def test_covering_scale_and_choice_of_N() -> None:
    assert covering_scale(101) == pytest.approx(101 ** (11 / 12) / math.sqrt(math.log(101)))
    choice = covering_window_length(10007, 1.0, 1.0)
    assert choice["exponent_11_12"] > choice["exponent_11_18"] > 0
