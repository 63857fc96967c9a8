from __future__ import annotations

import math
from typing import Any

import numpy as np
import numpy.typing as npt

from ..exceptions.error_strings import ErrorsCurveSums
from ..exceptions.exceptions import InvalidDegreeError
from .residue_set import WindowSpec


class CurvePolynomial:
    """Bivariate polynomial over F_p stored as a coefficient grid.

    ``coeffs[a, b]`` is the coefficient of ``x**a * y**b``. Curves built by
    ``build_difference_polynomial`` have the separated form ``u(x) - v(y)``.
    """

    __slots__ = (
        "_p",
        "_L",
        "_j",
        "_k",
        "_coeffs",
    )

    def __init__(
        self,
        p: int,
        coeffs: npt.NDArray[np.int64],
        L: int = 0,
        j: int | None = None,
        k: int | None = None,
    ) -> None:
        self._p: int = int(p)
        self._coeffs: npt.NDArray[np.int64] = np.mod(coeffs, p).astype(np.int64)
        self._coeffs.flags.writeable = False
        self._L: int = int(L)
        self._j: int = int(j) if j is not None else self._coeffs.shape[0] - 1
        self._k: int = int(k) if k is not None else self._coeffs.shape[1] - 1
        if self.degree < 1:
            raise InvalidDegreeError(ErrorsCurveSums.degree_zero.format(self._j, self._k))

    @property
    def p(self) -> int:
        return self._p

    @property
    def L(self) -> int:
        return self._L

    @property
    def j(self) -> int:
        return self._j

    @property
    def k(self) -> int:
        return self._k

    @property
    def coeffs(self) -> npt.NDArray[np.int64]:
        return self._coeffs

    @property
    def degree(self) -> int:
        rows, cols = np.nonzero(self._coeffs)
        if rows.size == 0:
            return 0
        return int((rows + cols).max())

    def coefficient(self, a: int, b: int) -> int:
        if a >= self._coeffs.shape[0] or b >= self._coeffs.shape[1]:
            return 0
        return int(self._coeffs[a, b])

    def evaluate(
        self,
        xs: npt.ArrayLike,
        ys: npt.ArrayLike,
    ) -> npt.NDArray[np.int64]:
        """Values mod p on broadcast integer arrays."""
        x = np.mod(np.asarray(xs, dtype=np.int64), self._p)
        y = np.mod(np.asarray(ys, dtype=np.int64), self._p)
        result = np.zeros(np.broadcast_shapes(x.shape, y.shape), dtype=np.int64)
        for row in self._coeffs[::-1]:
            inner = np.zeros(y.shape, dtype=np.int64)
            for c in row[::-1]:
                inner = (inner * y + int(c)) % self._p
            result = (result * x + inner) % self._p
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CurvePolynomial):
            return self._p == other.p and bool(np.array_equal(self._coeffs, other.coeffs))
        return False

    def __hash__(self) -> int:
        return hash((self._p, self._coeffs.tobytes()))

    def __repr__(self) -> str:
        return (
            f"CurvePolynomial("
            f"p={self._p}, "
            f"L={self._L}, "
            f"j={self._j}, "
            f"k={self._k})"
        )


class XjParams:
    __slots__ = (
        "_epsilon",
        "_window",
        "_M",
    )

    def __init__(
        self,
        epsilon: float,
        window: WindowSpec,
        M: int,
    ) -> None:
        if epsilon <= 0:
            raise InvalidDegreeError(ErrorsCurveSums.epsilon_positive.format(epsilon))
        if M < 1:
            raise InvalidDegreeError(ErrorsCurveSums.cutoff_positive.format(M))
        self._epsilon: float = float(epsilon)
        self._window: WindowSpec = window
        self._M: int = int(M)

    @classmethod
    def for_prime(
        cls,
        p: int,
        epsilon: float,
        window: WindowSpec,
        M: int | None = None,
    ) -> XjParams:
        if epsilon <= 0:
            raise InvalidDegreeError(ErrorsCurveSums.epsilon_positive.format(epsilon))
        if M is None:
            M = max(1, math.floor(min(p ** (0.1 * epsilon), (p / window.N) ** 0.1)))
        return cls(epsilon, window, M)

    @property
    def epsilon(self) -> float:
        return self._epsilon

    @property
    def window(self) -> WindowSpec:
        return self._window

    @property
    def M(self) -> int:
        return self._M

    @property
    def data_object(self) -> dict[str, Any]:
        return {
            "epsilon": self._epsilon,
            "M": self._M,
            **self._window.data_object,
        }

    def __repr__(self) -> str:
        return (
            f"XjParams("
            f"epsilon={self._epsilon}, "
            f"window={self._window}, "
            f"M={self._M})"
        )
