from __future__ import annotations

from typing import Any


class FactorialResidueError(Exception):
    pass


class NotAnOddPrimeError(FactorialResidueError):
    pass


class InvalidResidueError(FactorialResidueError):
    pass


class InvalidWindowError(FactorialResidueError):
    pass


class InvalidDegreeError(FactorialResidueError):
    pass


class ModulusMismatchError(FactorialResidueError):
    pass


class InstanceTooLargeError(FactorialResidueError):
    pass


class HypothesisViolationError(FactorialResidueError):
    pass


class SearchBudgetExhaustedError(FactorialResidueError):
    __slots__ = (
        "_lambda_value",
        "_attempts",
    )

    def __init__(
        self,
        *args: Any,
        lambda_value: int | None = None,
        attempts: int | None = None,
        **kwargs: Any,
    ):
        super().__init__(*args, **kwargs)
        self._lambda_value = lambda_value
        self._attempts = attempts

    @property
    def lambda_value(self) -> int | None:
        return self._lambda_value

    @property
    def attempts(self) -> int | None:
        return self._attempts


class ExperimentConfigError(FactorialResidueError):
    __slots__ = (
        "_field",
    )

    def __init__(
        self,
        *args: Any,
        field: str | None = None,
        **kwargs: Any,
    ):
        super().__init__(*args, **kwargs)
        self._field = field

    @property
    def field(self) -> str | None:
        return self._field


class ReportWriteError(FactorialResidueError):
    pass
