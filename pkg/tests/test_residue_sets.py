from __future__ import annotations

import math

import numpy as np
import pytest
from sympy import primerange

from frlab.const.const import DENSITY_BAND, DENSITY_CONJECTURE
from frlab.exceptions.exceptions import (
    InvalidResidueError,
    InvalidWindowError,
    ModulusMismatchError,
    NotAnOddPrimeError,
)
from frlab.functions.modarith import build_prime_context, factorial_table
from frlab.functions.residue_sets import (
    density_experiment,
    factorial_range_set,
    farey_count,
    interval_inclusion_check,
    inverse_set,
    product_growth_experiment,
    product_set,
    quotient_growth_experiment,
    quotient_set,
    ruzsa_check,
    small_n_quotient_check,
)
from frlab.helpers.helpers import random_residues
from frlab.models.prime_context import PrimeContext
from frlab.models.residue_set import ResidueSet, WindowSpec


def _set(p: int, *members: int) -> ResidueSet:
    return ResidueSet.from_members(p, members)


def test_residue_set_rejects_zero_and_out_of_range() -> None:
    with pytest.raises(InvalidResidueError):
        _set(7, 0, 1)
    with pytest.raises(InvalidResidueError):
        _set(7, 7)


def test_residue_set_algebra() -> None:
    a, b = _set(11, 1, 2, 3), _set(11, 3, 4)
    assert a.union(b) == _set(11, 1, 2, 3, 4)
    assert a.intersection(b) == _set(11, 3)
    assert a.difference(b) == _set(11, 1, 2)
    assert _set(11, 3).issubset(a)
    assert 14 in a
    assert list(a) == [1, 2, 3]
    assert len(ResidueSet.full(11)) == 10


def test_modulus_mismatch() -> None:
    with pytest.raises(ModulusMismatchError):
        product_set(_set(7, 1), _set(11, 1))


def test_factorial_range_set_examples(ctx7: PrimeContext, ctx11: PrimeContext) -> None:
    assert factorial_range_set(ctx7, WindowSpec(0, 5)) == _set(7, 1, 2, 3, 6)
    assert factorial_range_set(ctx11, WindowSpec(0, 10)) == _set(11, 1, 2, 5, 6, 10)
    assert factorial_range_set(ctx7, WindowSpec(0, 1)) == _set(7, 1)


@pytest.mark.parametrize(("L", "N"), [(-1, 3), (0, 0), (3, 4), (0, 7)])
def test_invalid_windows(ctx7: PrimeContext, L: int, N: int) -> None:
    with pytest.raises(InvalidWindowError):
        factorial_range_set(ctx7, WindowSpec(L, N))


def test_product_set_examples() -> None:
    assert product_set(_set(7, 2, 3), _set(7, 3)) == _set(7, 6, 2)
    b = _set(13, 2, 5, 7)
    assert product_set(_set(13, 1), b) == b
    assert product_set(ResidueSet.full(13), _set(13, 4)) == ResidueSet.full(13)
    assert product_set(ResidueSet.empty(13), b).is_empty


def test_quotient_set_examples() -> None:
    assert quotient_set(_set(7, 1, 2), _set(7, 1, 2)) == _set(7, 1, 2, 4)
    assert quotient_set(_set(11, 3), _set(11, 3)) == _set(11, 1)
    assert inverse_set(_set(7, 2, 3)) == _set(7, 4, 5)


def test_quotient_set_matches_naive_pairs() -> None:
    p = 101
    rng = np.random.default_rng([0, p])
    a = ResidueSet.from_members(p, random_residues(rng, p, 17))
    b = ResidueSet.from_members(p, random_residues(rng, p, 9))
    naive = {x * pow(y, -1, p) % p for x in a for y in b}
    assert set(quotient_set(a, b)) == naive
    assert 1 in quotient_set(a, a)


def test_quotient_set_closed_under_inversion(ctx101: PrimeContext) -> None:
    rng = np.random.default_rng([1, 101])
    sets = [factorial_range_set(ctx101, WindowSpec(L, N)) for L, N in [(0, 10), (7, 30), (50, 50)]]
    sets += [ResidueSet.from_members(101, random_residues(rng, 101, size)) for size in (1, 5, 23)]
    for A in sets:
        Q = quotient_set(A, A)
        assert 1 in Q
        assert inverse_set(Q) == Q


def test_set_products_ignore_membership_order() -> None:
    p = 211
    rng = np.random.default_rng([2, p])
    for size_a, size_b in [(1, 1), (6, 13), (40, 25)]:
        a = random_residues(rng, p, size_a)
        b = random_residues(rng, p, size_b)
        A, B = ResidueSet.from_members(p, a), ResidueSet.from_members(p, b)
        shuffled_a = ResidueSet.from_members(p, rng.permutation(a))
        shuffled_b = ResidueSet.from_members(p, rng.permutation(b))
        assert product_set(shuffled_a, shuffled_b) == product_set(A, B)
        assert quotient_set(shuffled_a, shuffled_b) == quotient_set(A, B)
        assert product_set(B, A) == product_set(A, B)


def test_interval_inclusion_examples(ctx7: PrimeContext, ctx11: PrimeContext) -> None:
    report = interval_inclusion_check(ctx7, WindowSpec(0, 5))
    assert report.holds
    assert [w.m for w in report.witnesses] == [1, 2, 3, 4, 5]
    assert interval_inclusion_check(ctx11, WindowSpec(2, 4)).holds


def test_interval_inclusion_witnesses_lie_in_quotient(ctx101: PrimeContext) -> None:
    w = WindowSpec(13, 40)
    A = factorial_range_set(ctx101, w)
    Q = quotient_set(A, A)
    report = interval_inclusion_check(ctx101, w)
    assert report.holds
    assert all(witness.m in Q for witness in report.witnesses)


@pytest.mark.slow
@pytest.mark.parametrize("p", list(primerange(3, 200)))
def test_interval_inclusion_every_window(p: int) -> None:
    ctx = build_prime_context(p)
    for N in range(1, p):
        for L in range(0, p - N):
            assert interval_inclusion_check(ctx, WindowSpec(L, N)).holds


@pytest.mark.slow
def test_interval_inclusion_random_windows() -> None:
    p = 10007
    ctx = build_prime_context(p)
    table = factorial_table(ctx, p - 1)
    rng = np.random.default_rng([7, p])
    for _ in range(1000):
        N = int(rng.integers(1, p))
        L = int(rng.integers(0, p - N))
        assert interval_inclusion_check(ctx, WindowSpec(L, N), table).holds


def test_ruzsa_singletons_and_subgroup() -> None:
    one = _set(7, 1)
    report = ruzsa_check(one, one, one)
    assert (report.lhs, report.rhs, report.holds) == (1, 1.0, True)
    H = _set(7, 1, 2, 4)
    report = ruzsa_check(H, H, H)
    assert report.lhs == 3
    assert report.rhs == pytest.approx(3.0)
    assert report.holds


def test_ruzsa_rejects_empty_z() -> None:
    with pytest.raises(InvalidResidueError):
        ruzsa_check(_set(7, 1), _set(7, 2), ResidueSet.empty(7))


def test_ruzsa_random_triples() -> None:
    p = 1009
    rng = np.random.default_rng(42)
    for _ in range(200):
        X, Y, Z = (ResidueSet.from_members(p, random_residues(rng, p, int(rng.integers(1, 65)))) for _ in range(3))
        assert ruzsa_check(X, Y, Z).holds


def test_density_examples() -> None:
    report = density_experiment([7, 11])
    assert [row.density for row in report.rows] == [pytest.approx(4 / 6), pytest.approx(0.5)]
    assert report.mean == pytest.approx((4 / 6 + 0.5) / 2)


def test_density_validates_before_computing() -> None:
    with pytest.raises(NotAnOddPrimeError, match="not an odd prime"):
        density_experiment([7, 9])


@pytest.mark.slow
def test_density_band() -> None:
    report = density_experiment(list(primerange(10_000, 20_000)))
    assert abs(report.mean - DENSITY_CONJECTURE) <= DENSITY_BAND


def test_farey_examples() -> None:
    ctx = build_prime_context(101)
    small = farey_count(ctx, 2)
    assert (small.coprime_pairs, small.distinct_residues) == (3, 3)
    one = farey_count(ctx, 1)
    assert (one.coprime_pairs, one.distinct_residues) == (1, 1)
    report = farey_count(build_prime_context(1009), 30)
    assert report.counts_equal
    assert report.coprime_pairs == 555
    assert report.farey_ratio == pytest.approx(555 / (900 * 6 / math.pi**2))
    assert report.farey_ratio == pytest.approx(1.0, abs=0.02)


def test_farey_requires_square_below_p(ctx11: PrimeContext) -> None:
    with pytest.raises(InvalidWindowError):
        farey_count(ctx11, 4)


def test_quotient_growth_bounds(ctx101: PrimeContext) -> None:
    rows = quotient_growth_experiment(ctx101, [WindowSpec(0, 10), WindowSpec(5, 30)])
    for row in rows:
        assert row.lower_bound_holds
        assert row.square_bound_holds
        assert row.quotient_card >= row.N
        assert row.ratio > 0


def test_quotient_growth_rejects_single_element_window(ctx101: PrimeContext) -> None:
    with pytest.raises(InvalidWindowError):
        quotient_growth_experiment(ctx101, [WindowSpec(0, 1)])


@pytest.mark.slow
def test_quotient_growth_stability() -> None:
    ctx = build_prime_context(10007)
    rows = quotient_growth_experiment(ctx, [WindowSpec(0, N) for N in (150, 400, 1100, 3000)])
    ratios = [row.ratio for row in rows]
    assert min(ratios) > 0
    assert max(ratios) / min(ratios) < 5
    assert all(row.lower_bound_holds and row.square_bound_holds for row in rows)


def test_product_growth_chain(ctx101: PrimeContext) -> None:
    rows = product_growth_experiment(ctx101, [5, 10, 20])
    assert all(row.ruzsa_chain_holds for row in rows)
    assert all(row.product_card >= row.set_card for row in rows)


def test_small_n_quotient_check(ctx101: PrimeContext) -> None:
    report = small_n_quotient_check(ctx101, 9)
    assert report.holds
    assert report.ratios_checked == 81
