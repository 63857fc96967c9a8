from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from ..const.const import X_RANGE_DENOMINATOR, X_RANGE_NUMERATOR


def factorial_mod(
    n: int,
    p: int,
) -> int:
    value = 1
    for i in range(2, n + 1):
        value = value * i % p
    return value


def x_range_max(
    N: int,
) -> int:
    """Largest x with x < 3N/5, i.e. ceil(3N/5) - 1."""
    return -(-X_RANGE_NUMERATOR * N // X_RANGE_DENOMINATOR) - 1


def compensated_complex_sum(
    terms: Iterable[complex] | npt.NDArray[np.complex128],
) -> complex:
    values = np.asarray(list(terms) if not isinstance(terms, np.ndarray) else terms, dtype=np.complex128)
    return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))


def unit_phases(
    numerators: npt.NDArray[np.int64],
    p: int,
) -> npt.NDArray[np.complex128]:
    """e^{2 pi i a / p} for each a."""
    return np.exp(2j * np.pi * (numerators % p) / p)


def identity_tolerance(
    terms: int,
    base: float,
) -> float:
    return base * max(1, terms)


def log_log_fit(
    xs: Sequence[float],
    ys: Sequence[float],
) -> tuple[float, float, list[float]]:
    """Least-squares slope and intercept of log y against log x, with residuals."""
    log_x = np.log(np.asarray(xs, dtype=np.float64))
    log_y = np.log(np.asarray(ys, dtype=np.float64))
    slope, intercept = np.polyfit(log_x, log_y, 1)
    residuals = log_y - (slope * log_x + intercept)
    return float(slope), float(intercept), [float(r) for r in residuals]


def random_residues(
    rng: np.random.Generator,
    p: int,
    size: int,
) -> npt.NDArray[np.int64]:
    """Distinct residues drawn uniformly from 1..p-1."""
    size = max(0, min(size, p - 1))
    return rng.choice(np.arange(1, p, dtype=np.int64), size=size, replace=False)
