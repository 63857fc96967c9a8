from __future__ import annotations

from typing import Any

from ..exceptions.error_strings import ErrorsRepresentation
from ..exceptions.exceptions import InvalidResidueError
from ..helpers.helpers import factorial_mod
from .prime_context import PrimeContext


class FactorialIndex:
    """Smallest n <= B with n! equal to each attained residue."""

    __slots__ = (
        "_ctx",
        "_B",
        "_index",
    )

    def __init__(
        self,
        ctx: PrimeContext,
        B: int,
        index: dict[int, int],
    ) -> None:
        self._ctx: PrimeContext = ctx
        self._B: int = int(B)
        self._index: dict[int, int] = index

    @property
    def ctx(self) -> PrimeContext:
        return self._ctx

    @property
    def B(self) -> int:
        return self._B

    @property
    def index(self) -> dict[int, int]:
        return dict(self._index)

    @property
    def representatives(self) -> list[int]:
        """Arguments that are the first to attain their value, ascending."""
        return sorted(self._index.values())

    def lookup(self, value: int) -> int | None:
        return self._index.get(int(value) % self._ctx.p)

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, int):
            return False
        return value % self._ctx.p in self._index

    def __len__(self) -> int:
        return len(self._index)

    def __repr__(self) -> str:
        return (
            f"FactorialIndex("
            f"p={self._ctx.p}, "
            f"B={self._B}, "
            f"size={len(self._index)})"
        )


class RepresentationResult:
    """Seven arguments whose factorials multiply to lambda mod p.

    The product is recomputed from scratch on construction.
    """

    __slots__ = (
        "_p",
        "_lambda_value",
        "_args",
    )

    def __init__(
        self,
        ctx: PrimeContext,
        lambda_value: int,
        args: tuple[int, ...],
    ) -> None:
        p = ctx.p
        product = 1
        for n in args:
            product = product * factorial_mod(n, p) % p
        if product != lambda_value % p or any(n < 1 for n in args):
            raise InvalidResidueError(ErrorsRepresentation.bad_representation.format(args, lambda_value, p))
        self._p: int = p
        self._lambda_value: int = lambda_value % p
        self._args: tuple[int, ...] = tuple(sorted(args))

    @property
    def lambda_value(self) -> int:
        return self._lambda_value

    @property
    def args(self) -> tuple[int, ...]:
        return self._args

    @property
    def max_arg(self) -> int:
        return max(self._args)

    @property
    def data_object(self) -> dict[str, Any]:
        return {
            "lambda": self._lambda_value,
            "args": list(self._args),
            "max_arg": self.max_arg,
        }

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RepresentationResult):
            return (self._p, self._lambda_value, self._args) == (other._p, other.lambda_value, other.args)
        return False

    def __hash__(self) -> int:
        return hash((self._p, self._lambda_value, self._args))

    def __repr__(self) -> str:
        return (
            f"RepresentationResult("
            f"lambda={self._lambda_value}, "
            f"args={self._args}, "
            f"max_arg={self.max_arg})"
        )
