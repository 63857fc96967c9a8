from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import Any

import numpy as np
import numpy.typing as npt

from ..exceptions.error_strings import ErrorsResidueSets
from ..exceptions.exceptions import (
    InvalidResidueError,
    InvalidWindowError,
    ModulusMismatchError,
)


class ResidueSet:
    """Subset of the unit group mod p stored as a dense bitset of length p.

    Index 0 is never set. Instances are immutable.
    """

    __slots__ = (
        "_p",
        "_mask",
        "_card",
    )

    def __init__(
        self,
        p: int,
        mask: npt.NDArray[np.bool_],
    ) -> None:
        if mask.shape != (p,):
            raise InvalidResidueError(ErrorsResidueSets.member_range.format(mask.shape, p - 1))
        if bool(mask[0]):
            raise InvalidResidueError(ErrorsResidueSets.zero_member.format(0, p))
        self._p: int = int(p)
        self._mask: npt.NDArray[np.bool_] = mask
        self._mask.flags.writeable = False
        self._card: int = int(np.count_nonzero(mask))

    @classmethod
    def from_members(
        cls,
        p: int,
        members: Iterable[int] | npt.NDArray[np.int64],
    ) -> ResidueSet:
        if isinstance(members, np.ndarray):
            values = members.astype(np.int64, copy=False)
        else:
            values = np.fromiter((int(m) for m in members), dtype=np.int64)
        mask = np.zeros(p, dtype=np.bool_)
        if values.size:
            low, high = int(values.min()), int(values.max())
            if low < 0 or high >= p:
                raise InvalidResidueError(ErrorsResidueSets.member_range.format(low if low < 0 else high, p - 1))
            if bool((values == 0).any()):
                raise InvalidResidueError(ErrorsResidueSets.zero_member.format(0, p))
            mask[values] = True
        return cls(p, mask)

    @classmethod
    def empty(cls, p: int) -> ResidueSet:
        return cls(p, np.zeros(p, dtype=np.bool_))

    @classmethod
    def full(cls, p: int) -> ResidueSet:
        mask = np.ones(p, dtype=np.bool_)
        mask[0] = False
        return cls(p, mask)

    @property
    def p(self) -> int:
        return self._p

    @property
    def mask(self) -> npt.NDArray[np.bool_]:
        return self._mask

    @property
    def card(self) -> int:
        return self._card

    @property
    def is_empty(self) -> bool:
        return self._card == 0

    def elements(self) -> npt.NDArray[np.int64]:
        return np.flatnonzero(self._mask).astype(np.int64)

    def _check_modulus(self, other: ResidueSet) -> None:
        if self._p != other.p:
            raise ModulusMismatchError(ErrorsResidueSets.modulus_mismatch.format(self._p, other.p))

    def union(self, other: ResidueSet) -> ResidueSet:
        self._check_modulus(other)
        return ResidueSet(self._p, self._mask | other.mask)

    def intersection(self, other: ResidueSet) -> ResidueSet:
        self._check_modulus(other)
        return ResidueSet(self._p, self._mask & other.mask)

    def difference(self, other: ResidueSet) -> ResidueSet:
        self._check_modulus(other)
        return ResidueSet(self._p, self._mask & ~other.mask)

    def issubset(self, other: ResidueSet) -> bool:
        self._check_modulus(other)
        return not bool((self._mask & ~other.mask).any())

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, (int, np.integer)):
            return False
        residue = int(value) % self._p
        return bool(self._mask[residue])

    def __len__(self) -> int:
        return self._card

    def __iter__(self) -> Iterator[int]:
        return iter(int(x) for x in np.flatnonzero(self._mask))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ResidueSet):
            return self._p == other.p and bool(np.array_equal(self._mask, other.mask))
        return False

    def __hash__(self) -> int:
        return hash((self._p, self._mask.tobytes()))

    def __repr__(self) -> str:
        return (
            f"ResidueSet("
            f"p={self._p}, "
            f"card={self._card})"
        )


class WindowSpec:
    """Argument window L+1 <= n <= L+N."""

    __slots__ = (
        "_L",
        "_N",
    )

    def __init__(
        self,
        L: int,
        N: int,
    ) -> None:
        self._L: int = int(L)
        self._N: int = int(N)

    @property
    def L(self) -> int:
        return self._L

    @property
    def N(self) -> int:
        return self._N

    @property
    def first(self) -> int:
        return self._L + 1

    @property
    def last(self) -> int:
        return self._L + self._N

    def is_valid_for(self, p: int) -> bool:
        return 0 <= self._L and 1 <= self._N and self._L + self._N < p

    def validate(self, p: int) -> None:
        if not self.is_valid_for(p):
            raise InvalidWindowError(ErrorsResidueSets.invalid_window.format(self._L, self._N, p))

    @property
    def data_object(self) -> dict[str, Any]:
        return {
            "L": self._L,
            "N": self._N,
        }

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WindowSpec):
            return self._L == other.L and self._N == other.N
        return False

    def __hash__(self) -> int:
        return hash((self._L, self._N))

    def __repr__(self) -> str:
        return (
            f"WindowSpec("
            f"L={self._L}, "
            f"N={self._N})"
        )
