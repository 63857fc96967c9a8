from __future__ import annotations

import cmath
from typing import Any

import numpy as np
import numpy.typing as npt

from ..exceptions.error_strings import ErrorsCharacterSums
from ..exceptions.exceptions import InvalidResidueError
from .prime_context import PrimeContext
from .residue_set import ResidueSet


class CharacterTable:
    """Multiplicative characters chi_k(a) = omega**(k * dlog a), 0 <= k <= p-2."""

    __slots__ = (
        "_ctx",
        "_roots",
    )

    def __init__(
        self,
        ctx: PrimeContext,
    ) -> None:
        self._ctx: PrimeContext = ctx
        order = ctx.order
        self._roots: npt.NDArray[np.complex128] = np.exp(2j * np.pi * np.arange(order) / order)
        self._roots.flags.writeable = False

    @property
    def ctx(self) -> PrimeContext:
        return self._ctx

    @property
    def order(self) -> int:
        return self._ctx.order

    @property
    def omega(self) -> complex:
        return complex(self._roots[1 % self.order])

    @property
    def roots(self) -> npt.NDArray[np.complex128]:
        return self._roots

    def _check_index(self, k: int) -> None:
        if not 0 <= k < self.order:
            raise InvalidResidueError(ErrorsCharacterSums.character_index.format(k, self.order - 1))

    def chi(self, k: int, a: int) -> complex:
        self._check_index(k)
        residue = int(a) % self._ctx.p
        if residue == 0:
            return 0j
        return complex(self._roots[(k * int(self._ctx.dlog[residue])) % self.order])

    def values(self, k: int) -> npt.NDArray[np.complex128]:
        """chi_k on every residue 0..p-1, with chi_k(0) = 0."""
        self._check_index(k)
        out = np.zeros(self._ctx.p, dtype=np.complex128)
        exponents = (k * self._ctx.dlog[1:]) % self.order
        out[1:] = self._roots[exponents]
        return out

    def exponent_spectrum(
        self,
        weights: npt.NDArray[np.float64],
    ) -> npt.NDArray[np.complex128]:
        """sum_e weights[e] * omega**(k*e) for every k, by one inverse DFT."""
        return self.order * np.fft.ifft(weights)

    def set_sums(self, S: ResidueSet) -> npt.NDArray[np.complex128]:
        """T_k = sum_{x in S} chi_k(x) for every k."""
        weights = np.zeros(self.order, dtype=np.float64)
        np.add.at(weights, self._ctx.dlog[S.elements()], 1.0)
        return self.exponent_spectrum(weights)

    def __repr__(self) -> str:
        return (
            f"CharacterTable("
            f"p={self._ctx.p}, "
            f"omega={cmath.polar(self.omega)})"
        )


class DoubleSumResult:
    __slots__ = (
        "_k",
        "_value",
        "_bound",
    )

    def __init__(
        self,
        k: int,
        value: complex,
        bound: float,
    ) -> None:
        self._k: int = int(k)
        self._value: complex = complex(value)
        self._bound: float = float(bound)

    @property
    def k(self) -> int:
        return self._k

    @property
    def value(self) -> complex:
        return self._value

    @property
    def modulus(self) -> float:
        return abs(self._value)

    @property
    def bound(self) -> float:
        return self._bound

    @property
    def data_object(self) -> dict[str, Any]:
        return {
            "k": self._k,
            "real": self._value.real,
            "imag": self._value.imag,
            "modulus": self.modulus,
            "bound": self._bound,
        }

    def __repr__(self) -> str:
        return (
            f"DoubleSumResult("
            f"k={self._k}, "
            f"value={self._value}, "
            f"modulus={self.modulus}, "
            f"bound={self._bound})"
        )
