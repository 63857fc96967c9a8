from __future__ import annotations

import math

import numpy as np
import pytest
from sympy import primerange

from frlab.exceptions.exceptions import HypothesisViolationError, InvalidDegreeError
from frlab.functions.curve_sums import (
    bombieri_check,
    build_difference_polynomial,
    build_xj,
    count_J,
    curve_exponential_sum,
    curve_points,
    dirichlet_kernel_l1,
    dividing_line_constant,
    exponential_sum_grid,
    find_dividing_line,
    line_divisibility_check,
    xj_new_elements,
)
from frlab.functions.modarith import build_prime_context
from frlab.helpers.helpers import x_range_max
from frlab.models.curve import CurvePolynomial, XjParams
from frlab.models.prime_context import PrimeContext
from frlab.models.residue_set import ResidueSet, WindowSpec


def _line(p: int) -> CurvePolynomial:
    return CurvePolynomial(p, np.array([[0, -1], [1, 0]], dtype=np.int64))


def test_difference_polynomial_coefficients(ctx7: PrimeContext, ctx11: PrimeContext) -> None:
    f = build_difference_polynomial(ctx11, 0, 2, 1)
    assert [f.coefficient(2, 0), f.coefficient(1, 0), f.coefficient(0, 0), f.coefficient(0, 1)] == [1, 3, 1, 10]
    assert f.degree == 2
    g = build_difference_polynomial(ctx7, 1, 2, 1)
    assert [g.coefficient(2, 0), g.coefficient(1, 0), g.coefficient(0, 0), g.coefficient(0, 1)] == [1, 5, 4, 6]


def test_difference_polynomial_vanishes_at_shifted_roots(ctx101: PrimeContext) -> None:
    L, j, k = 17, 4, 3
    f = build_difference_polynomial(ctx101, L, j, k)
    ys = np.array([(-L - 1) % 101])
    for i in range(1, j + 1):
        assert f.evaluate(np.array([(-L - i) % 101]), ys)[0] == 0


@pytest.mark.parametrize(("j", "k"), [(1, 1), (2, 2), (1, 2), (0, 1), (11, 1)])
def test_difference_polynomial_degree_checks(ctx11: PrimeContext, j: int, k: int) -> None:
    with pytest.raises(InvalidDegreeError):
        build_difference_polynomial(ctx11, 0, j, k)


def test_points_on_graph_curve(ctx11: PrimeContext) -> None:
    f = build_difference_polynomial(ctx11, 0, 2, 1)
    points = curve_points(f)
    assert len(points) == 11
    assert sorted(x for x, _ in points) == list(range(11))


def test_point_count_bound(ctx11: PrimeContext) -> None:
    f = build_difference_polynomial(ctx11, 0, 3, 2)
    brute = [(x, y) for x in range(11) for y in range(11) if ((x + 1) * (x + 2) * (x + 3) - (y + 1) * (y + 2)) % 11 == 0]
    assert sorted(curve_points(f)) == brute
    assert len(brute) <= 33


def test_curve_sum_zero_frequency_counts_points(ctx11: PrimeContext) -> None:
    f = build_difference_polynomial(ctx11, 0, 2, 1)
    value = curve_exponential_sum(f, 0, 0)
    assert value.real == pytest.approx(11)
    assert value.imag == pytest.approx(0, abs=1e-9)


def test_curve_sum_gauss_modulus(ctx11: PrimeContext) -> None:
    f = build_difference_polynomial(ctx11, 0, 2, 1)
    assert abs(curve_exponential_sum(f, 0, 1)) == pytest.approx(math.sqrt(11), abs=1e-6)


def test_exponential_sum_grid_matches_direct_sums(ctx11: PrimeContext) -> None:
    f = build_difference_polynomial(ctx11, 3, 3, 1)
    grid = exponential_sum_grid(f)
    for b1, b2 in [(0, 0), (1, 0), (0, 1), (4, 7), (10, 10)]:
        assert grid[b1, b2] == pytest.approx(curve_exponential_sum(f, b1, b2), abs=1e-9)


def test_curve_sum_conjugate_symmetry(ctx11: PrimeContext) -> None:
    for L, j, k in [(0, 2, 1), (3, 3, 2), (5, 4, 1)]:
        f = build_difference_polynomial(ctx11, L, j, k)
        for b1, b2 in [(0, 1), (1, 0), (4, 7), (10, 3), (6, 6)]:
            mirrored = curve_exponential_sum(f, (11 - b1) % 11, (11 - b2) % 11)
            assert curve_exponential_sum(f, b1, b2) == pytest.approx(mirrored.conjugate(), abs=1e-9)


def test_line_divisibility() -> None:
    f = _line(7)
    assert line_divisibility_check(f, 1, 6)
    assert dividing_line_constant(f, 1, 6) == 0
    assert find_dividing_line(f) is not None


def test_difference_curves_have_no_dividing_line(ctx11: PrimeContext) -> None:
    f = build_difference_polynomial(ctx11, 0, 2, 1)
    for b1 in range(11):
        for b2 in range(11):
            if (b1, b2) != (0, 0):
                assert not line_divisibility_check(f, b1, b2)


def test_line_divisibility_rejects_zero_frequency(ctx11: PrimeContext) -> None:
    with pytest.raises(InvalidDegreeError):
        line_divisibility_check(build_difference_polynomial(ctx11, 0, 2, 1), 0, 0)


def test_bombieri_small_curve(ctx11: PrimeContext) -> None:
    report = bombieri_check(build_difference_polynomial(ctx11, 0, 2, 1))
    assert report.holds
    assert report.full_scan
    assert report.bound == pytest.approx(8 * math.sqrt(11))
    assert report.max_modulus <= 26.6


def test_bombieri_refuses_a_line() -> None:
    with pytest.raises(HypothesisViolationError):
        bombieri_check(_line(7))


def test_bombieri_sampled_scan_is_seeded() -> None:
    ctx = build_prime_context(1013)
    f = build_difference_polynomial(ctx, 0, 2, 1)
    first = bombieri_check(f, full_scan_max_prime=100, samples=64, seed=3)
    second = bombieri_check(f, full_scan_max_prime=100, samples=64, seed=3)
    assert not first.full_scan
    assert first == second
    assert first.holds


@pytest.mark.slow
@pytest.mark.parametrize("p", list(primerange(101, 500)))
def test_bombieri_sweep(p: int) -> None:
    ctx = build_prime_context(p)
    for L in (0, 5, 17):
        for j in range(2, 5):
            for k in range(1, j):
                f = build_difference_polynomial(ctx, L, j, k)
                assert find_dividing_line(f) is None
                assert bombieri_check(f).holds


def test_count_J_example(ctx11: PrimeContext) -> None:
    assert count_J(ctx11, WindowSpec(0, 10), 2, 1) == 1


def test_count_J_diagonal(ctx101: PrimeContext) -> None:
    w = WindowSpec(3, 50)
    assert count_J(ctx101, w, 3, 3) >= x_range_max(50)


def test_build_xj_examples(ctx11: PrimeContext) -> None:
    w = WindowSpec(0, 10)
    assert build_xj(ctx11, w, 1) == ResidueSet.from_members(11, [2, 3, 4, 5, 6])
    assert build_xj(ctx11, w, 2) == ResidueSet.from_members(11, [6, 1, 9, 8])


def test_overlap_bounded_by_J(ctx101: PrimeContext) -> None:
    w = WindowSpec(0, 60)
    for j in range(2, 6):
        for k in range(1, j):
            overlap = build_xj(ctx101, w, j).intersection(build_xj(ctx101, w, k)).card
            assert overlap <= count_J(ctx101, w, j, k)


def test_xj_new_elements(ctx101: PrimeContext) -> None:
    w = WindowSpec(0, 40)
    report = xj_new_elements(ctx101, XjParams(0.3, w, 3))
    assert [row.j for row in report.rows] == [1, 2, 3]
    assert report.rows[0].card == x_range_max(40)
    assert report.rows[0].new_elements == report.rows[0].card
    assert all(row.card_floor_holds for row in report.rows)
    assert all(row.inclusion_exclusion_holds for row in report.rows)
    assert all(row.overlap_bounds_hold for row in report.rows)
    assert report.union_in_quotient
    assert report.union_card == sum(row.new_elements for row in report.rows)


def test_xj_card_floor_skips_zero_products(ctx11: PrimeContext) -> None:
    report = xj_new_elements(ctx11, XjParams(0.3, WindowSpec(0, 10), 10))
    last = report.rows[-1]
    assert last.j == 10
    assert last.card == 0
    assert last.card_floor == 0
    assert report.rows[5].card_floor == pytest.approx((x_range_max(10) - 1) / 6)
    assert all(row.card_floor_holds for row in report.rows)


@pytest.mark.slow
@pytest.mark.parametrize("p", list(primerange(5, 500)))
def test_xj_sweep(p: int) -> None:
    ctx = build_prime_context(p)
    for w in (WindowSpec(0, (p - 1) // 2), WindowSpec(p // 3, p - p // 3 - 1)):
        report = xj_new_elements(ctx, XjParams(0.3, w, 5))
        assert all(row.card_floor_holds for row in report.rows)
        assert all(row.overlap_bounds_hold for row in report.rows)
        assert all(row.inclusion_exclusion_holds for row in report.rows)
        assert report.union_in_quotient


def test_xj_params_cutoff() -> None:
    w = WindowSpec(0, 1100)
    assert XjParams.for_prime(10007, 0.3, w).M == 1
    assert XjParams.for_prime(10007, 0.3, w, M=4).M == 4
    with pytest.raises(InvalidDegreeError):
        XjParams.for_prime(10007, 0.0, w)


def test_dirichlet_kernel(ctx101: PrimeContext) -> None:
    assert dirichlet_kernel_l1(ctx101, 1) == pytest.approx(101)
    assert dirichlet_kernel_l1(ctx101, 100) == pytest.approx(200)
    assert dirichlet_kernel_l1(ctx101, 60) < 101 * math.log(101)
