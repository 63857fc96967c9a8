"""Set algebra in the unit group mod p and the cardinality experiments."""
from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from ..const.const import DENSITY_CONJECTURE, FAREY_CONSTANT, LOGGER
from ..exceptions.error_strings import ErrorsResidueSets
from ..exceptions.exceptions import (
    InvalidResidueError,
    InvalidWindowError,
    ModulusMismatchError,
)
from ..models.prime_context import FactorialTable, PrimeContext
from ..models.reports import (
    DensityReport,
    DensityRow,
    FareyReport,
    InclusionReport,
    InclusionWitness,
    ProductGrowthRow,
    QuotientGrowthRow,
    RuzsaReport,
    SmallQuotientReport,
)
from ..models.residue_set import ResidueSet, WindowSpec
from .modarith import build_prime_context, factorial_table, require_odd_prime


def factorial_range_set(
    ctx: PrimeContext,
    w: WindowSpec,
) -> ResidueSet:
    w.validate(ctx.p)
    table = factorial_table(ctx, w.last)
    return ResidueSet.from_members(ctx.p, table.vals[w.first:w.last + 1])


def _check_same_modulus(
    A: ResidueSet,
    B: ResidueSet,
) -> None:
    if A.p != B.p:
        raise ModulusMismatchError(ErrorsResidueSets.modulus_mismatch.format(A.p, B.p))


def product_set(
    A: ResidueSet,
    B: ResidueSet,
) -> ResidueSet:
    _check_same_modulus(A, B)
    p = A.p
    outer, inner = (A, B) if A.card <= B.card else (B, A)
    inner_elements = inner.elements()
    mask = np.zeros(p, dtype=np.bool_)
    for a in outer.elements():
        mask[(inner_elements * int(a)) % p] = True
    return ResidueSet(p, mask)


def inverse_set(A: ResidueSet) -> ResidueSet:
    p = A.p
    return ResidueSet.from_members(p, [pow(int(a), -1, p) for a in A.elements()])


def quotient_set(
    A: ResidueSet,
    B: ResidueSet,
) -> ResidueSet:
    _check_same_modulus(A, B)
    return product_set(A, inverse_set(B))


def interval_inclusion_check(
    ctx: PrimeContext,
    w: WindowSpec,
    table: FactorialTable | None = None,
) -> InclusionReport:
    """Exhibit {1} and every m in [L+2, L+N] as n!/(n-1)! with both factorials in A."""
    w.validate(ctx.p)
    p = ctx.p
    if table is None or table.n_max < w.last:
        table = factorial_table(ctx, w.last)
    A = ResidueSet.from_members(p, table.vals[w.first:w.last + 1])
    witnesses = [InclusionWitness(1, w.first, w.first)]
    for m in range(w.first + 1, w.last + 1):
        numerator, denominator = table[m], table[m - 1]
        ratio = numerator * pow(denominator, -1, p) % p
        if ratio != m % p or numerator not in A or denominator not in A:
            LOGGER.warning("Inclusion fails at p=%d, %r, m=%d.", p, w, m)
            return InclusionReport(False, witnesses, missing=m % p)
        witnesses.append(InclusionWitness(m % p, m, m - 1))
    return InclusionReport(True, witnesses)


def ruzsa_check(
    X: ResidueSet,
    Y: ResidueSet,
    Z: ResidueSet,
) -> RuzsaReport:
    """|X/Y| * |Z| <= |XZ| * |ZY| in the multiplicative group."""
    _check_same_modulus(X, Y)
    _check_same_modulus(X, Z)
    if Z.is_empty:
        raise InvalidResidueError(ErrorsResidueSets.empty_z)
    lhs = quotient_set(X, Y).card
    xz = product_set(X, Z).card
    zy = product_set(Z, Y).card
    return RuzsaReport(
        lhs=lhs,
        rhs=xz * zy / Z.card,
        holds=lhs * Z.card <= xz * zy,
        sizes=(X.card, Y.card, Z.card),
    )


def density_experiment(
    primes: Sequence[int],
) -> DensityReport:
    rows = list()
    for p in primes:
        require_odd_prime(p)
    for p in primes:
        ctx = build_prime_context(p)
        A = factorial_range_set(ctx, WindowSpec(0, p - 1))
        rows.append(DensityRow(p=p, distinct=A.card, density=A.card / (p - 1)))
    mean = float(np.mean([row.density for row in rows])) if rows else 0.0
    return DensityReport(rows=rows, mean=mean, deviation=mean - DENSITY_CONJECTURE)


def farey_count(
    ctx: PrimeContext,
    N: int,
) -> FareyReport:
    p = ctx.p
    if N < 1:
        raise InvalidWindowError(ErrorsResidueSets.farey_nonpositive.format(N))
    if N * N >= p:
        raise InvalidWindowError(ErrorsResidueSets.farey_range.format(N, p))
    coprime_pairs = sum(
        1
        for n in range(1, N + 1)
        for m in range(1, N + 1)
        if math.gcd(n, m) == 1
    )
    numerators = np.arange(1, N + 1, dtype=np.int64)
    mask = np.zeros(p, dtype=np.bool_)
    for m in range(1, N + 1):
        mask[(numerators * pow(m, -1, p)) % p] = True
    distinct = int(np.count_nonzero(mask))
    return FareyReport(
        N=N,
        coprime_pairs=coprime_pairs,
        distinct_residues=distinct,
        farey_ratio=coprime_pairs / (FAREY_CONSTANT * N * N),
    )


def quotient_growth_experiment(
    ctx: PrimeContext,
    windows: Sequence[WindowSpec],
) -> list[QuotientGrowthRow]:
    """|A/A| per window with the N log(p/N) and (N log(p/N))^{1/2} normalisations."""
    p = ctx.p
    rows = list()
    for w in windows:
        w.validate(p)
        if w.N < 2:
            raise InvalidWindowError(ErrorsResidueSets.window_too_short.format(w.N))
    for w in windows:
        A = factorial_range_set(ctx, w)
        Q = quotient_set(A, A)
        scale = w.N * math.log(p / w.N)
        rows.append(
            QuotientGrowthRow(
                L=w.L,
                N=w.N,
                set_card=A.card,
                quotient_card=Q.card,
                ratio=Q.card / scale,
                set_ratio=A.card / math.sqrt(scale),
                lower_bound_holds=Q.card >= w.N,
                square_bound_holds=Q.card <= A.card * A.card,
            )
        )
        LOGGER.debug("Quotient growth p=%d %r: |A|=%d |A/A|=%d.", p, w, A.card, Q.card)
    return rows


def product_growth_experiment(
    ctx: PrimeContext,
    Ns: Sequence[int],
) -> list[ProductGrowthRow]:
    """|A|, |A/A| and |AA| for A = A(0, N), with |A/A| * |A| <= |AA|^2 checked exactly."""
    p = ctx.p
    rows = list()
    for N in Ns:
        WindowSpec(0, N).validate(p)
    for N in Ns:
        A = factorial_range_set(ctx, WindowSpec(0, N))
        Q = quotient_set(A, A)
        AA = product_set(A, A)
        rows.append(
            ProductGrowthRow(
                N=N,
                set_card=A.card,
                quotient_card=Q.card,
                product_card=AA.card,
                c1_estimate=AA.card / (N * math.log(p)) ** 0.75,
                ruzsa_chain_holds=Q.card * A.card <= AA.card * AA.card,
            )
        )
    return rows


def small_n_quotient_check(
    ctx: PrimeContext,
    N: int,
) -> SmallQuotientReport:
    """Every n/m with n, m <= N < sqrt(p) lies in (AA)/(AA) for A = A(0, N)."""
    p = ctx.p
    if N * N >= p:
        raise InvalidWindowError(ErrorsResidueSets.farey_range.format(N, p))
    A = factorial_range_set(ctx, WindowSpec(0, N))
    AA = product_set(A, A)
    Q = quotient_set(AA, AA)
    missing = [
        (n, m)
        for n in range(1, N + 1)
        for m in range(1, N + 1)
        if n * pow(m, -1, p) % p not in Q
    ]
    return SmallQuotientReport(N=N, ratios_checked=N * N, missing=missing, product_card=AA.card)
