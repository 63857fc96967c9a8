"""Exact arithmetic in F_p: primes, primitive roots, discrete logs, factorials."""
from __future__ import annotations

import numpy as np
from sympy import factorint, isprime

from ..const.const import LOGGER, MIN_PRIME
from ..exceptions.error_strings import ErrorsModArith
from ..exceptions.exceptions import InvalidResidueError, NotAnOddPrimeError
from ..models.prime_context import FactorialTable, PrimeContext


def is_odd_prime(p: int) -> bool:
    return p >= MIN_PRIME and p % 2 == 1 and bool(isprime(p))


def require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise NotAnOddPrimeError(ErrorsModArith.not_odd_prime.format(p))


def primitive_root(p: int) -> int:
    """Least g whose order is p-1, tested against the prime factors of p-1."""
    require_odd_prime(p)
    cofactors = [(p - 1) // q for q in factorint(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in cofactors):
            return g
    raise NotAnOddPrimeError(ErrorsModArith.no_primitive_root.format(p))


def build_prime_context(p: int) -> PrimeContext:
    require_odd_prime(p)
    g = primitive_root(p)
    dlog = np.full(p, -1, dtype=np.int64)
    powers = np.empty(p - 1, dtype=np.int64)
    x = 1
    for e in range(p - 1):
        dlog[x] = e
        powers[e] = x
        x = x * g % p
    LOGGER.debug("Prime context p=%d, g=%d.", p, g)
    return PrimeContext(p, g, dlog, powers)


def factorial_table(
    ctx: PrimeContext,
    n_max: int,
) -> FactorialTable:
    if not 0 <= n_max <= ctx.p - 1:
        raise InvalidResidueError(ErrorsModArith.factorial_range.format(n_max, ctx.p - 1))
    p = ctx.p
    vals = np.empty(n_max + 1, dtype=np.int64)
    value = 1
    vals[0] = 1
    for n in range(1, n_max + 1):
        value = value * n % p
        vals[n] = value
    return FactorialTable(ctx, n_max, vals)


def _require_unit(
    ctx: PrimeContext,
    a: int,
    message: str,
) -> int:
    residue = int(a) % ctx.p
    if residue == 0:
        raise InvalidResidueError(message.format(a, ctx.p))
    return residue


def mod_inverse(
    ctx: PrimeContext,
    a: int,
) -> int:
    residue = _require_unit(ctx, a, ErrorsModArith.zero_no_inverse)
    return int(ctx.powers[(-int(ctx.dlog[residue])) % ctx.order])


def discrete_log(
    ctx: PrimeContext,
    a: int,
) -> int:
    residue = _require_unit(ctx, a, ErrorsModArith.zero_no_log)
    return int(ctx.dlog[residue])
