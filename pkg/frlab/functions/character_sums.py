"""Multiplicative characters, the factorial double sum and the 7-factorial count J."""
from __future__ import annotations

import itertools
import math
from collections import Counter

import numpy as np
import numpy.typing as npt

from ..const.const import (
    BRUTEFORCE_LIMIT,
    CHARACTER_TABLE_VERIFY_MAX_PRIME,
    DEFAULT_SEED,
    IDENTITY_TOLERANCE,
    J7_FACTORIAL_FACTORS,
    LOGGER,
)
from ..exceptions.error_strings import ErrorsCharacterSums
from ..exceptions.exceptions import (
    InstanceTooLargeError,
    InvalidResidueError,
    InvalidWindowError,
)
from ..helpers.helpers import compensated_complex_sum, identity_tolerance
from ..models.characters import CharacterTable, DoubleSumResult
from ..models.prime_context import PrimeContext
from ..models.reports import MaxDoubleSumReport, ParsevalReport
from ..models.residue_set import ResidueSet
from .modarith import factorial_table


def verify_character_table(
    tbl: CharacterTable,
    seed: int = DEFAULT_SEED,
) -> None:
    """Principal character, multiplicativity and orthogonality, checked numerically."""
    ctx = tbl.ctx
    p, order = ctx.p, tbl.order
    tolerance = identity_tolerance(order, IDENTITY_TOLERANCE)
    if not np.allclose(tbl.values(0)[1:], 1.0, atol=IDENTITY_TOLERANCE):
        raise InvalidResidueError(ErrorsCharacterSums.table_invariant.format(p, "principal character"))

    ks = np.arange(order, dtype=np.int64)[:, None]
    exponents = (ks * ctx.dlog[1:][None, :]) % order
    column_sums = tbl.roots[exponents].sum(axis=0)
    expected = np.zeros(p - 1, dtype=np.complex128)
    expected[0] = order
    if not np.allclose(column_sums, expected, atol=tolerance):
        raise InvalidResidueError(ErrorsCharacterSums.table_invariant.format(p, "orthogonality"))

    rng = np.random.default_rng([seed, p])
    a = rng.integers(1, p, size=64)
    b = rng.integers(1, p, size=64)
    chi_a = tbl.roots[(ks * ctx.dlog[a][None, :]) % order]
    chi_b = tbl.roots[(ks * ctx.dlog[b][None, :]) % order]
    chi_ab = tbl.roots[(ks * ctx.dlog[(a * b) % p][None, :]) % order]
    if not np.allclose(chi_ab, chi_a * chi_b, atol=IDENTITY_TOLERANCE):
        raise InvalidResidueError(ErrorsCharacterSums.table_invariant.format(p, "multiplicativity"))


def build_character_table(ctx: PrimeContext) -> CharacterTable:
    tbl = CharacterTable(ctx)
    if ctx.p <= CHARACTER_TABLE_VERIFY_MAX_PRIME:
        verify_character_table(tbl)
    return tbl


def _require_interval(
    ctx: PrimeContext,
    N: int,
) -> None:
    if N < 1 or 2 * N > ctx.p - 1:
        raise InvalidWindowError(ErrorsCharacterSums.interval_range.format(N, ctx.p - 1))


def sum_multiplicities(N: int) -> npt.NDArray[np.int64]:
    """c[s] = #{(n, m) in [1, N]^2 : n + m = s} for 0 <= s <= 2N."""
    s = np.arange(2 * N + 1, dtype=np.int64)
    counts = N - np.abs(s - N - 1)
    counts[:2] = 0
    return np.clip(counts, 0, None)


def _factorial_exponent_weights(
    ctx: PrimeContext,
    N: int,
) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
    counts = sum_multiplicities(N)
    table = factorial_table(ctx, 2 * N)
    exponents = ctx.dlog[table.vals[2:2 * N + 1]]
    return exponents, counts[2:]


def double_sum_bound(
    ctx: PrimeContext,
    N: int,
) -> float:
    return N ** 1.75 * ctx.p ** 0.125


def factorial_double_sum(
    ctx: PrimeContext,
    N: int,
    k: int,
) -> DoubleSumResult:
    """sum_{n, m <= N} chi_k((n + m)!) through the multiplicity vector over s = n + m."""
    _require_interval(ctx, N)
    order = ctx.order
    if not 0 <= k < order:
        raise InvalidResidueError(ErrorsCharacterSums.character_index.format(k, order - 1))
    exponents, counts = _factorial_exponent_weights(ctx, N)
    if k == 0:
        value = complex(int(counts.sum()), 0.0)
    else:
        phases = np.exp(2j * np.pi * ((k * exponents) % order) / order)
        value = compensated_complex_sum(counts * phases)
    return DoubleSumResult(k, value, double_sum_bound(ctx, N))


def double_sum_spectrum(
    tbl: CharacterTable,
    N: int,
) -> npt.NDArray[np.complex128]:
    """S_k for every k via one inverse DFT of the dlog-binned multiplicities."""
    ctx = tbl.ctx
    _require_interval(ctx, N)
    exponents, counts = _factorial_exponent_weights(ctx, N)
    weights = np.zeros(tbl.order, dtype=np.float64)
    np.add.at(weights, exponents, counts.astype(np.float64))
    spectrum = tbl.exponent_spectrum(weights)
    spectrum[0] = complex(N * N, 0.0)
    return spectrum


def max_nonprincipal_double_sum(
    ctx: PrimeContext,
    N: int,
    tbl: CharacterTable | None = None,
) -> MaxDoubleSumReport:
    _require_interval(ctx, N)
    bound = double_sum_bound(ctx, N)
    spectrum = double_sum_spectrum(tbl if tbl is not None else CharacterTable(ctx), N)
    moduli = np.abs(spectrum[1:])
    argmax = int(np.argmax(moduli)) + 1
    max_modulus = float(moduli[argmax - 1])
    return MaxDoubleSumReport(argmax=argmax, max_modulus=max_modulus, bound=bound, ratio=max_modulus / bound)


def estimate_c2(
    ctx: PrimeContext,
    N: int,
    tbl: CharacterTable | None = None,
) -> float:
    """max_{chi != chi_0} |S_chi|^3 / (N^{21/4} p^{3/8})."""
    report = max_nonprincipal_double_sum(ctx, N, tbl)
    return report.max_modulus ** 3 / (N ** 5.25 * ctx.p ** 0.375)


def _require_units(S: ResidueSet) -> None:
    if bool(S.mask[0]):
        raise InvalidResidueError(ErrorsCharacterSums.zero_lambda.format(S.p))


def parseval_check(
    tbl: CharacterTable,
    S: ResidueSet,
) -> ParsevalReport:
    """(1/(p-1)) sum_k |sum_{x in S} chi_k(x)|^2 against |S|."""
    _require_units(S)
    order = tbl.order
    sums = tbl.set_sums(S)
    lhs = math.fsum((np.abs(sums) ** 2).tolist()) / order
    tolerance = identity_tolerance(order, IDENTITY_TOLERANCE)
    return ParsevalReport(lhs=lhs, rhs=S.card, holds=abs(lhs - S.card) < tolerance)


def _require_lambda(
    ctx: PrimeContext,
    lambda_value: int,
) -> int:
    residue = int(lambda_value) % ctx.p
    if residue == 0:
        raise InvalidResidueError(ErrorsCharacterSums.zero_lambda.format(ctx.p))
    return residue


def j7_character_terms(
    ctx: PrimeContext,
    N: int,
    AA: ResidueSet,
    tbl: CharacterTable | None = None,
) -> npt.NDArray[np.complex128]:
    """S_k^3 * T_k^2 for every character index k."""
    _require_interval(ctx, N)
    _require_units(AA)
    tbl = tbl if tbl is not None else CharacterTable(ctx)
    S = double_sum_spectrum(tbl, N)
    T = tbl.set_sums(AA)
    return S ** J7_FACTORIAL_FACTORS * T ** 2


def j7_via_characters(
    ctx: PrimeContext,
    N: int,
    AA: ResidueSet,
    lambda_value: int,
    tbl: CharacterTable | None = None,
) -> float:
    """(1/(p-1)) sum_k S_k^3 T_k^2 conj(chi_k(lambda))."""
    residue = _require_lambda(ctx, lambda_value)
    tbl = tbl if tbl is not None else CharacterTable(ctx)
    terms = j7_character_terms(ctx, N, AA, tbl)
    order = tbl.order
    ks = np.arange(order, dtype=np.int64)
    conj_chi = tbl.roots[(-ks * int(ctx.dlog[residue])) % order]
    value = compensated_complex_sum(terms * conj_chi) / order
    scale = N ** (2 * J7_FACTORIAL_FACTORS) * max(1, AA.card) ** 2
    if abs(value.imag) > identity_tolerance(order, IDENTITY_TOLERANCE) * scale:
        LOGGER.warning("J character sum has imaginary part %.3e at p=%d.", value.imag, ctx.p)
    return value.real


def j7_lower_bound(
    ctx: PrimeContext,
    N: int,
    AA: ResidueSet,
    tbl: CharacterTable | None = None,
) -> float:
    """Principal term minus the absolute nonprincipal tail: a lower bound for J at every lambda."""
    terms = j7_character_terms(ctx, N, AA, tbl)
    order = ctx.order
    principal = N ** (2 * J7_FACTORIAL_FACTORS) * AA.card ** 2 / order
    tail = math.fsum(np.abs(terms[1:]).tolist()) / order
    return principal - tail


def j7_bruteforce(
    ctx: PrimeContext,
    N: int,
    AA: ResidueSet,
    lambda_value: int,
) -> int:
    """Exact count over n_i, m_i in [1, N] and x, y in AA."""
    residue = _require_lambda(ctx, lambda_value)
    _require_interval(ctx, N)
    _require_units(AA)
    size = N ** (2 * J7_FACTORIAL_FACTORS) * AA.card ** 2
    if size > BRUTEFORCE_LIMIT:
        raise InstanceTooLargeError(ErrorsCharacterSums.bruteforce_too_large.format(size, BRUTEFORCE_LIMIT))
    p = ctx.p
    table = factorial_table(ctx, 2 * N)
    elements = [int(x) for x in AA.elements()]
    pair_products = Counter(x * y % p for x in elements for y in elements)
    count = 0
    interval = range(1, N + 1)
    for args in itertools.product(interval, repeat=2 * J7_FACTORIAL_FACTORS):
        product = 1
        for i in range(J7_FACTORIAL_FACTORS):
            product = product * table[args[2 * i] + args[2 * i + 1]] % p
        count += pair_products.get(residue * pow(product, -1, p) % p, 0)
    return count
