from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt


class PrimeContext:
    """Odd prime modulus with a primitive root and a dense discrete-log table.

    ``dlog[a]`` is the exponent of ``a`` to base ``g`` for ``1 <= a <= p-1``;
    ``dlog[0]`` holds -1. ``powers[e]`` is ``g**e mod p`` for ``0 <= e <= p-2``.
    """

    __slots__ = (
        "_p",
        "_g",
        "_dlog",
        "_powers",
    )

    def __init__(
        self,
        p: int,
        g: int,
        dlog: npt.NDArray[np.int64],
        powers: npt.NDArray[np.int64],
    ) -> None:
        self._p: int = int(p)
        self._g: int = int(g)
        self._dlog: npt.NDArray[np.int64] = dlog
        self._powers: npt.NDArray[np.int64] = powers
        self._dlog.flags.writeable = False
        self._powers.flags.writeable = False

    @property
    def p(self) -> int:
        return self._p

    @property
    def g(self) -> int:
        return self._g

    @property
    def order(self) -> int:
        return self._p - 1

    @property
    def dlog(self) -> npt.NDArray[np.int64]:
        return self._dlog

    @property
    def powers(self) -> npt.NDArray[np.int64]:
        return self._powers

    @property
    def data_object(self) -> dict[str, Any]:
        return {
            "p": self._p,
            "g": self._g,
        }

    def __repr__(self) -> str:
        return (
            f"PrimeContext("
            f"p={self._p}, "
            f"g={self._g})"
        )


class FactorialTable:
    __slots__ = (
        "_ctx",
        "_n_max",
        "_vals",
    )

    def __init__(
        self,
        ctx: PrimeContext,
        n_max: int,
        vals: npt.NDArray[np.int64],
    ) -> None:
        self._ctx: PrimeContext = ctx
        self._n_max: int = int(n_max)
        self._vals: npt.NDArray[np.int64] = vals
        self._vals.flags.writeable = False

    @property
    def ctx(self) -> PrimeContext:
        return self._ctx

    @property
    def n_max(self) -> int:
        return self._n_max

    @property
    def vals(self) -> npt.NDArray[np.int64]:
        return self._vals

    def __getitem__(self, n: int) -> int:
        return int(self._vals[n])

    def __len__(self) -> int:
        return len(self._vals)

    def __repr__(self) -> str:
        return (
            f"FactorialTable("
            f"p={self._ctx.p}, "
            f"n_max={self._n_max})"
        )
