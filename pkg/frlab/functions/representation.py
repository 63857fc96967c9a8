"""Seven-factorial representations of residues and the minimal covering bound."""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from ..const.const import (
    COVERING_EXPONENT,
    COVERING_PRINTED_EXPONENT,
    EXACT_MINIMAL_MAX_PRIME,
    LOGGER,
    MIN_TREND_POINTS,
    REPRESENTATION_FACTORS,
    SEARCH_BUDGET,
    SEARCHED_FACTORS,
)
from ..exceptions.error_strings import ErrorsRepresentation
from ..exceptions.exceptions import (
    InstanceTooLargeError,
    InvalidResidueError,
    SearchBudgetExhaustedError,
)
from ..helpers.helpers import log_log_fit
from ..models.prime_context import PrimeContext
from ..models.reports import CoverageReport, TrendReport
from ..models.representation import FactorialIndex, RepresentationResult
from ..models.residue_set import ResidueSet
from .modarith import factorial_table
from .residue_sets import product_set


def _require_bound(
    ctx: PrimeContext,
    B: int,
) -> None:
    if not 1 <= B <= ctx.p - 1:
        raise InvalidResidueError(ErrorsRepresentation.bound_range.format(B, ctx.p - 1))


def build_factorial_index(
    ctx: PrimeContext,
    B: int,
) -> FactorialIndex:
    _require_bound(ctx, B)
    table = factorial_table(ctx, B)
    index: dict[int, int] = dict()
    for n in range(1, B + 1):
        index.setdefault(table[n], n)
    return FactorialIndex(ctx, B, index)


class TupleSearch:
    """Nondecreasing 6-tuples of first-attaining arguments, grown by largest element.

    ``layers[k]`` maps each product value of k factorials to one tuple reaching
    it; after ``extend(r)`` every tuple with entries <= r has its value present.
    """

    __slots__ = (
        "_ctx",
        "_index",
        "_layers",
    )

    def __init__(
        self,
        ctx: PrimeContext,
        index: FactorialIndex,
    ) -> None:
        self._ctx: PrimeContext = ctx
        self._index: FactorialIndex = index
        self._layers: list[dict[int, tuple[int, ...]]] = [{1: ()}] + [dict() for _ in range(SEARCHED_FACTORS)]

    def extend(
        self,
        r: int,
        factorial_value: int,
    ) -> list[tuple[int, tuple[int, ...]]]:
        """Admit argument r; return the 6-fold products that are new."""
        p = self._ctx.p
        fresh: list[tuple[int, tuple[int, ...]]] = list()
        for k in range(1, SEARCHED_FACTORS + 1):
            below, layer = self._layers[k - 1], self._layers[k]
            for value, args in list(below.items()):
                product = value * factorial_value % p
                if product not in layer:
                    layer[product] = args + (r,)
                    if k == SEARCHED_FACTORS:
                        fresh.append((product, layer[product]))
        return fresh

    def run(
        self,
        lambdas: Iterable[int],
        budget: int = SEARCH_BUDGET,
    ) -> dict[int, RepresentationResult | None]:
        p = self._ctx.p
        pending = list(dict.fromkeys(int(v) % p for v in lambdas))
        attempts = {v: 0 for v in pending}
        results: dict[int, RepresentationResult | None] = dict()
        table = factorial_table(self._ctx, self._index.B)
        for r in self._index.representatives:
            if not pending:
                break
            for value, args in self.extend(r, table[r]):
                inverse = pow(value, -1, p)
                still_pending = list()
                for target in pending:
                    attempts[target] += 1
                    if attempts[target] > budget:
                        raise SearchBudgetExhaustedError(
                            ErrorsRepresentation.budget_exhausted.format(budget, target),
                            lambda_value=target,
                            attempts=attempts[target],
                        )
                    last = self._index.lookup(target * inverse)
                    if last is None:
                        still_pending.append(target)
                    else:
                        results[target] = RepresentationResult(self._ctx, target, args + (last,))
                pending = still_pending
                if not pending:
                    break
        for target in pending:
            results[target] = None
        return results


def find_representations(
    ctx: PrimeContext,
    lambdas: Iterable[int],
    B: int,
    budget: int = SEARCH_BUDGET,
) -> dict[int, RepresentationResult | None]:
    targets = list(lambdas)
    for target in targets:
        if int(target) % ctx.p == 0:
            raise InvalidResidueError(ErrorsRepresentation.zero_lambda.format(ctx.p))
    index = build_factorial_index(ctx, B)
    return TupleSearch(ctx, index).run(targets, budget)


def find_representation(
    ctx: PrimeContext,
    lambda_value: int,
    B: int,
    budget: int = SEARCH_BUDGET,
) -> RepresentationResult | None:
    """Seven arguments <= B with product of factorials lambda, or None if none exist."""
    return find_representations(ctx, [lambda_value], B, budget)[int(lambda_value) % ctx.p]


def minimal_bound_for_all(ctx: PrimeContext) -> CoverageReport:
    """Least B whose 7-fold factorial product set is the whole unit group."""
    p = ctx.p
    table = factorial_table(ctx, p - 1)
    layers = [ResidueSet.from_members(p, [1])] + [ResidueSet.empty(p) for _ in range(REPRESENTATION_FACTORS)]
    coverage: list[float] = list()
    first_bound: dict[int, int] = dict()
    seen: set[int] = set()
    B_star: int | None = None
    for B in range(1, p):
        value = table[B]
        if value not in seen:
            seen.add(value)
            single = ResidueSet.from_members(p, [value])
            previous = layers[REPRESENTATION_FACTORS]
            for k in range(1, REPRESENTATION_FACTORS + 1):
                layers[k] = layers[k].union(product_set(layers[k - 1], single))
            for reached in layers[REPRESENTATION_FACTORS].difference(previous):
                first_bound[reached] = B
        covered = layers[REPRESENTATION_FACTORS].card
        coverage.append(covered / (p - 1))
        if covered == p - 1:
            B_star = B
            break
    if B_star is None:
        LOGGER.warning(ErrorsRepresentation.no_bound.format(p))
    LOGGER.debug("Coverage p=%d: B*=%s.", p, B_star)
    return CoverageReport(B_star=B_star, coverage=coverage, first_bound=first_bound)


def exact_minimal_max(
    ctx: PrimeContext,
    lambda_value: int,
) -> int | None:
    """Least max argument over every 7-tuple representing lambda."""
    if ctx.p > EXACT_MINIMAL_MAX_PRIME:
        raise InstanceTooLargeError(ErrorsRepresentation.exact_max_range.format(EXACT_MINIMAL_MAX_PRIME, ctx.p))
    if int(lambda_value) % ctx.p == 0:
        raise InvalidResidueError(ErrorsRepresentation.zero_lambda.format(ctx.p))
    return minimal_bound_for_all(ctx).first_bound.get(int(lambda_value) % ctx.p)


def covering_scale(p: int) -> float:
    return p ** COVERING_EXPONENT / math.sqrt(math.log(p))


def exponent_trend(reports: Sequence[tuple[int, float]]) -> TrendReport:
    """Slope of log B* against log p and the ratios B* / (p^{11/12} / sqrt(log p))."""
    if len(reports) < MIN_TREND_POINTS:
        raise InvalidResidueError(ErrorsRepresentation.trend_points.format(MIN_TREND_POINTS, len(reports)))
    for p, b_star in reports:
        if p <= 1 or b_star <= 0:
            raise InvalidResidueError(ErrorsRepresentation.trend_positive.format(p, b_star))
    primes = [float(p) for p, _ in reports]
    bounds = [float(b) for _, b in reports]
    exponent, intercept, residuals = log_log_fit(primes, bounds)
    ratios = [b / covering_scale(p) for p, b in reports]
    return TrendReport(exponent=exponent, intercept=intercept, residuals=residuals, ratios=ratios)


def covering_window_length(
    p: int,
    c1: float,
    c2: float,
) -> dict[str, int]:
    """N = ceil(2 (c2/c1)^{2/3} p^{e} / sqrt(log p)) for the proved and the printed exponent."""
    factor = 2 * (c2 / c1) ** (2.0 / 3.0) / math.sqrt(math.log(p))
    return {
        "exponent_11_12": math.ceil(factor * p ** COVERING_EXPONENT),
        "exponent_11_18": math.ceil(factor * p ** COVERING_PRINTED_EXPONENT),
    }
