from __future__ import annotations

import math

import numpy as np
import pytest
from sympy import primerange

from frlab.exceptions.exceptions import InstanceTooLargeError, InvalidResidueError, InvalidWindowError
from frlab.functions.character_sums import (
    build_character_table,
    double_sum_spectrum,
    estimate_c2,
    factorial_double_sum,
    j7_bruteforce,
    j7_lower_bound,
    j7_via_characters,
    max_nonprincipal_double_sum,
    parseval_check,
    sum_multiplicities,
    verify_character_table,
)
from frlab.functions.modarith import build_prime_context
from frlab.functions.residue_sets import factorial_range_set, product_set
from frlab.helpers.helpers import random_residues
from frlab.models.characters import CharacterTable
from frlab.models.prime_context import PrimeContext
from frlab.models.residue_set import ResidueSet, WindowSpec


def test_character_values(ctx7: PrimeContext) -> None:
    tbl = CharacterTable(ctx7)
    assert tbl.chi(0, 5) == 1
    assert tbl.chi(3, 0) == 0
    assert tbl.chi(1, 3) == pytest.approx(tbl.omega)
    for a in range(1, 7):
        for b in range(1, 7):
            assert tbl.chi(2, a * b) == pytest.approx(tbl.chi(2, a) * tbl.chi(2, b))
    with pytest.raises(InvalidResidueError):
        tbl.chi(6, 1)


@pytest.mark.parametrize("p", list(primerange(3, 500)))
def test_character_table_identities(p: int) -> None:
    tbl = CharacterTable(build_prime_context(p))
    verify_character_table(tbl)
    rows = np.array([tbl.values(k)[1:] for k in range(tbl.order)])
    gram = rows @ rows.conj().T
    assert np.allclose(gram, (p - 1) * np.eye(p - 1), atol=1e-6 * p)


def test_sum_multiplicities() -> None:
    assert sum_multiplicities(2).tolist() == [0, 0, 1, 2, 1]
    assert int(sum_multiplicities(9).sum()) == 81


def test_double_sum_examples(ctx5: PrimeContext) -> None:
    assert ctx5.g == 2
    result = factorial_double_sum(ctx5, 2, 1)
    assert result.value == pytest.approx(1 + 1j)
    assert result.modulus == pytest.approx(math.sqrt(2))
    assert factorial_double_sum(ctx5, 2, 0).value == 4
    for k in range(4):
        single = factorial_double_sum(ctx5, 1, k)
        assert single.modulus == pytest.approx(1)


def test_double_sum_rejects_long_interval(ctx5: PrimeContext) -> None:
    with pytest.raises(InvalidWindowError):
        factorial_double_sum(ctx5, 3, 1)
    with pytest.raises(InvalidResidueError):
        factorial_double_sum(ctx5, 2, 4)


def test_spectrum_matches_direct_sums(ctx101: PrimeContext) -> None:
    spectrum = double_sum_spectrum(CharacterTable(ctx101), 40)
    for k in (0, 1, 17, 50, 99):
        assert spectrum[k] == pytest.approx(factorial_double_sum(ctx101, 40, k).value, abs=1e-6)


def test_max_nonprincipal(ctx5: PrimeContext, ctx101: PrimeContext) -> None:
    assert max_nonprincipal_double_sum(ctx5, 1).max_modulus == pytest.approx(1)
    report = max_nonprincipal_double_sum(ctx101, 40)
    assert 1 <= report.argmax <= 99
    assert report.ratio == pytest.approx(report.max_modulus / (40**1.75 * 101**0.125))
    assert estimate_c2(ctx101, 40) > 0


def test_parseval_examples(ctx101: PrimeContext) -> None:
    tbl = build_character_table(ctx101)
    assert parseval_check(tbl, ResidueSet.from_members(101, [1])).lhs == pytest.approx(1)
    assert parseval_check(tbl, ResidueSet.full(101)).lhs == pytest.approx(100)
    S = ResidueSet.from_members(101, random_residues(np.random.default_rng(7), 101, 37))
    report = parseval_check(tbl, S)
    assert report.lhs == pytest.approx(37, abs=1e-6)
    assert report.holds


@pytest.mark.slow
@pytest.mark.parametrize("p", list(primerange(3, 500)))
def test_parseval_random_sets(p: int) -> None:
    tbl = build_character_table(build_prime_context(p))
    rng = np.random.default_rng([0, p])
    for _ in range(50):
        S = ResidueSet.from_members(p, random_residues(rng, p, int(rng.integers(1, p))))
        assert parseval_check(tbl, S).holds


def test_j7_small_examples(ctx7: PrimeContext) -> None:
    one = ResidueSet.from_members(7, [1])
    assert j7_bruteforce(ctx7, 1, one, 1) == 1
    assert j7_bruteforce(ctx7, 1, one, 2) == 0
    assert j7_via_characters(ctx7, 1, one, 1) == pytest.approx(1, abs=1e-9)
    assert j7_via_characters(ctx7, 1, one, 2) == pytest.approx(0, abs=1e-9)


def test_j7_rejects_zero_lambda(ctx7: PrimeContext) -> None:
    with pytest.raises(InvalidResidueError):
        j7_via_characters(ctx7, 1, ResidueSet.from_members(7, [1]), 7)


def test_j7_bruteforce_guard(ctx101: PrimeContext) -> None:
    with pytest.raises(InstanceTooLargeError):
        j7_bruteforce(ctx101, 40, ResidueSet.full(101), 1)


def test_j7_character_formula_on_random_instances() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(200):
        N = int(rng.integers(1, 4))
        p = int(rng.choice([q for q in primerange(2 * N + 1, 32)]))
        ctx = build_prime_context(p)
        AA = ResidueSet.from_members(p, random_residues(rng, p, int(rng.integers(1, min(6, p - 1) + 1))))
        lam = int(rng.integers(1, p))
        exact = j7_bruteforce(ctx, N, AA, lam)
        assert round(j7_via_characters(ctx, N, AA, lam)) == exact
        assert j7_lower_bound(ctx, N, AA) <= exact + 1e-6


def test_j7_total_over_lambda(ctx11: PrimeContext) -> None:
    A = factorial_range_set(ctx11, WindowSpec(0, 2))
    AA = product_set(A, A)
    total = sum(round(j7_via_characters(ctx11, 2, AA, lam)) for lam in range(1, 11))
    assert total == 2**6 * AA.card**2
