"""Difference curves u(x) - v(y), their exponential sums and the X_j sets."""
from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from ..const.const import (
    CURVE_FREQUENCY_SAMPLES,
    DEFAULT_SEED,
    FULL_SCAN_MAX_PRIME,
    LINE_SCAN_MAX_PRIME,
    LOGGER,
)
from ..exceptions.error_strings import ErrorsCurveSums
from ..exceptions.exceptions import HypothesisViolationError, InvalidDegreeError
from ..helpers.helpers import compensated_complex_sum, unit_phases, x_range_max
from ..models.curve import CurvePolynomial, XjParams
from ..models.prime_context import PrimeContext
from ..models.reports import BombieriReport, XjReport, XjRow
from ..models.residue_set import ResidueSet, WindowSpec
from .modarith import factorial_table
from .residue_sets import factorial_range_set, quotient_set


def shifted_product_coeffs(
    p: int,
    L: int,
    degree: int,
) -> list[int]:
    """Ascending coefficients of prod_{i=1}^{degree} (t + L + i) mod p."""
    coeffs = [1]
    for i in range(1, degree + 1):
        shift = (L + i) % p
        nxt = [0] * (len(coeffs) + 1)
        for idx, c in enumerate(coeffs):
            nxt[idx] = (nxt[idx] + c * shift) % p
            nxt[idx + 1] = (nxt[idx + 1] + c) % p
        coeffs = nxt
    return coeffs


def shifted_product_values(
    p: int,
    L: int,
    degree: int,
    ts: npt.NDArray[np.int64],
) -> npt.NDArray[np.int64]:
    values = np.ones(ts.shape, dtype=np.int64)
    for i in range(1, degree + 1):
        values = values * ((ts + L + i) % p) % p
    return values


def build_difference_polynomial(
    ctx: PrimeContext,
    L: int,
    j: int,
    k: int,
) -> CurvePolynomial:
    p = ctx.p
    if j < 1 or k < 1:
        raise InvalidDegreeError(ErrorsCurveSums.degree_zero.format(j, k))
    if k >= j:
        raise InvalidDegreeError(ErrorsCurveSums.degree_order.format(j, k))
    if j > p - 1:
        raise InvalidDegreeError(ErrorsCurveSums.degree_range.format(j, p - 1))
    grid = np.zeros((j + 1, k + 1), dtype=np.int64)
    grid[:, 0] = shifted_product_coeffs(p, L, j)
    v = shifted_product_coeffs(p, L, k)
    grid[0, :] = (grid[0, :] - np.asarray(v, dtype=np.int64)) % p
    return CurvePolynomial(p, grid, L=L, j=j, k=k)


def point_mask(f: CurvePolynomial) -> npt.NDArray[np.bool_]:
    """Boolean p x p grid, True where f(x, y) = 0."""
    axis = np.arange(f.p, dtype=np.int64)
    return f.evaluate(axis[:, None], axis[None, :]) == 0


def curve_points(f: CurvePolynomial) -> list[tuple[int, int]]:
    xs, ys = np.nonzero(point_mask(f))
    return list(zip(xs.tolist(), ys.tolist()))


def curve_exponential_sum(
    f: CurvePolynomial,
    b1: int,
    b2: int,
) -> complex:
    xs, ys = np.nonzero(point_mask(f))
    phases = unit_phases(int(b1) * xs.astype(np.int64) + int(b2) * ys.astype(np.int64), f.p)
    return compensated_complex_sum(phases)


def dividing_line_constant(
    f: CurvePolynomial,
    b1: int,
    b2: int,
) -> int | None:
    """Some c with f vanishing identically on b1 x + b2 y + c = 0, else None.

    The restriction to a line has degree <= deg f < p, so it is the zero
    polynomial iff it vanishes at deg f + 1 distinct parameter values.
    """
    p = f.p
    b1, b2 = b1 % p, b2 % p
    if b1 == 0 and b2 == 0:
        raise InvalidDegreeError(ErrorsCurveSums.zero_frequency)
    samples = np.arange(min(f.degree + 1, p), dtype=np.int64)[:, None]
    offsets = np.arange(p, dtype=np.int64)[None, :]
    if b2 != 0:
        slope = (-b1 * pow(b2, -1, p)) % p
        values = f.evaluate(samples, (slope * samples + offsets) % p)
        scale = b2
    else:
        values = f.evaluate(offsets, samples)
        scale = b1
    vanishing = np.flatnonzero(~values.any(axis=0))
    if vanishing.size == 0:
        return None
    return int((-int(vanishing[0]) * scale) % p)


def line_divisibility_check(
    f: CurvePolynomial,
    b1: int,
    b2: int,
) -> bool:
    return dividing_line_constant(f, b1, b2) is not None


def find_dividing_line(f: CurvePolynomial) -> tuple[int, int, int] | None:
    """Scan the normalised directions (b1, 1) and (1, 0) for a dividing line."""
    for b1 in range(f.p):
        c = dividing_line_constant(f, b1, 1)
        if c is not None:
            return b1, 1, c
    c = dividing_line_constant(f, 1, 0)
    if c is not None:
        return 1, 0, c
    return None


def exponential_sum_grid(f: CurvePolynomial) -> npt.NDArray[np.complex128]:
    """S(b1, b2) for every frequency pair, by one 2-D DFT of the point grid."""
    return np.conj(np.fft.fft2(point_mask(f).astype(np.float64)))


def bombieri_check(
    f: CurvePolynomial,
    full_scan_max_prime: int = FULL_SCAN_MAX_PRIME,
    samples: int = CURVE_FREQUENCY_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> BombieriReport:
    p = f.p
    if p <= LINE_SCAN_MAX_PRIME:
        line = find_dividing_line(f)
        if line is not None:
            raise HypothesisViolationError(ErrorsCurveSums.divisible_by_line.format(*line))
    d = f.degree
    bound = 2 * d * d * math.sqrt(p)
    mask = point_mask(f)
    point_count = int(np.count_nonzero(mask))
    if p <= full_scan_max_prime:
        moduli = np.abs(exponential_sum_grid(f))
        moduli[0, 0] = -1.0
        flat = int(np.argmax(moduli))
        argmax = (flat // p, flat % p)
        max_modulus = float(moduli[argmax])
        full_scan = True
    else:
        rng = np.random.default_rng([seed, p, f.j, f.k, f.L])
        pairs = rng.integers(0, p, size=(samples, 2))
        pairs = pairs[(pairs != 0).any(axis=1)]
        xs, ys = np.nonzero(mask)
        max_modulus, argmax = -1.0, (0, 0)
        for b1, b2 in pairs.tolist():
            modulus = abs(compensated_complex_sum(unit_phases(b1 * xs + b2 * ys, p)))
            if modulus > max_modulus:
                max_modulus, argmax = modulus, (b1, b2)
        full_scan = False
    LOGGER.debug("Curve sum %r: max %.4f against bound %.4f.", f, max_modulus, bound)
    return BombieriReport(
        max_modulus=max_modulus,
        argmax=argmax,
        bound=bound,
        holds=max_modulus <= bound,
        point_count=point_count,
        full_scan=full_scan,
    )


def _validate_degrees(
    j: int,
    k: int,
) -> None:
    if j < 1 or k < 1:
        raise InvalidDegreeError(ErrorsCurveSums.degree_zero.format(j, k))


def count_J(
    ctx: PrimeContext,
    w: WindowSpec,
    j: int,
    k: int,
) -> int:
    """Pairs 1 <= x, y < 0.6N with prod_{i<=j}(x+L+i) = prod_{i<=k}(y+L+i) mod p."""
    w.validate(ctx.p)
    _validate_degrees(j, k)
    p = ctx.p
    xs = np.arange(1, x_range_max(w.N) + 1, dtype=np.int64)
    left = np.bincount(shifted_product_values(p, w.L, j, xs), minlength=p)
    right = np.bincount(shifted_product_values(p, w.L, k, xs), minlength=p)
    return int(np.dot(left, right))


def build_xj(
    ctx: PrimeContext,
    w: WindowSpec,
    j: int,
) -> ResidueSet:
    """Image of x -> prod_{i<=j}(x+L+i) on 1 <= x < 0.6N, zero dropped."""
    w.validate(ctx.p)
    _validate_degrees(j, 1)
    p = ctx.p
    xs = np.arange(1, x_range_max(w.N) + 1, dtype=np.int64)
    values = shifted_product_values(p, w.L, j, xs)
    return ResidueSet.from_members(p, values[values != 0])


def xj_new_elements(
    ctx: PrimeContext,
    params: XjParams,
) -> XjReport:
    w = params.window
    w.validate(ctx.p)
    p, N, L = ctx.p, w.N, w.L
    x_max = x_range_max(N)
    xs = np.arange(1, x_max + 1, dtype=np.int64)
    sets = {j: build_xj(ctx, w, j) for j in range(1, params.M + 1)}
    rows = list()
    union = ResidueSet.empty(p)
    for j in range(1, params.M + 1):
        X = sets[j]
        new = X.difference(union).card
        overlaps = {k: X.intersection(sets[k]).card for k in range(1, j)}
        j_counts = {k: count_J(ctx, w, j, k) for k in range(1, j)}
        floor = X.card - sum(overlaps.values())
        # x with a zero factor leave X_j
        zeros = int(np.count_nonzero(shifted_product_values(p, L, j, xs) == 0))
        card_floor = (x_max - zeros) / j
        rows.append(
            XjRow(
                j=j,
                card=X.card,
                new_elements=new,
                target=N / (3 * j),
                card_floor=card_floor,
                card_floor_holds=X.card >= card_floor,
                inclusion_exclusion_floor=floor,
                inclusion_exclusion_holds=new >= floor,
                overlap_bounds_hold=all(overlaps[k] <= j_counts[k] for k in overlaps),
                j_counts=j_counts,
                overlaps=overlaps,
            )
        )
        union = union.union(X)

    table = factorial_table(ctx, w.last)
    A = factorial_range_set(ctx, w)
    Q = quotient_set(A, A)
    witnessed = ResidueSet.empty(p)
    unwitnessed = 0
    in_quotient = True
    for j in range(1, params.M + 1):
        usable = xs[xs + j <= N]
        unwitnessed += int(xs.size - usable.size)
        if usable.size == 0:
            continue
        numerators = table.vals[L + usable + j]
        denominators = table.vals[L + usable]
        inverses = np.asarray([pow(int(d), -1, p) for d in denominators], dtype=np.int64)
        values = numerators * inverses % p
        expected = shifted_product_values(p, L, j, usable)
        members = A.mask[numerators] & A.mask[denominators]
        if not (bool(np.array_equal(values, expected)) and bool(members.all()) and bool(Q.mask[values].all())):
            in_quotient = False
        witnessed = witnessed.union(ResidueSet.from_members(p, values))
    LOGGER.debug("X_j sets p=%d %r: union %d, witnessed %d.", p, w, union.card, witnessed.card)
    return XjReport(
        rows=rows,
        union_card=union.card,
        union_target=N * math.log(p / N),
        union_witnessed=witnessed.card,
        union_unwitnessed=unwitnessed,
        union_in_quotient=in_quotient,
    )


def dirichlet_kernel_l1(
    ctx: PrimeContext,
    H: int,
) -> float:
    """sum_b |sum_{z=1}^{H} e(bz/p)| over all b mod p."""
    p = ctx.p
    if not 1 <= H < p:
        raise InvalidDegreeError(ErrorsCurveSums.kernel_range.format(H, p))
    indicator = np.zeros(p, dtype=np.float64)
    indicator[1:H + 1] = 1.0
    inner = p * np.fft.ifft(indicator)
    return math.fsum(np.abs(inner).tolist())
