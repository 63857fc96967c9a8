from __future__ import annotations

from typing import Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)

from ..const.const import DEFAULT_EPSILON, DEFAULT_SEED
from ..const.enums import ExperimentName, OutputFormat
from ..exceptions.error_strings import (
    ErrorsCharacterSums,
    ErrorsConfig,
    ErrorsCurveSums,
    ErrorsModArith,
    ErrorsResidueSets,
)
from ..exceptions.exceptions import ExperimentConfigError
from ..functions.modarith import is_odd_prime

SINGLE_PRIME_EXPERIMENTS = {
    ExperimentName.QUOTIENT,
    ExperimentName.XJ,
    ExperimentName.CHARSUM,
    ExperimentName.J7,
    ExperimentName.RUZSA,
    ExperimentName.FAREY,
    ExperimentName.GROWTH,
}

REQUIRES_N = {
    ExperimentName.QUOTIENT,
    ExperimentName.XJ,
    ExperimentName.CHARSUM,
    ExperimentName.J7,
    ExperimentName.FAREY,
    ExperimentName.GROWTH,
}


class ExperimentConfig(BaseModel):
    """Validated parameters of one experiment run."""

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    experiment: ExperimentName
    p: int | None = None
    p_min: int | None = None
    p_max: int | None = None
    L: list[int] | None = None
    N: list[int] | None = None
    j: int | None = Field(default=None, ge=1)
    k: int | None = Field(default=None, ge=1)
    M: int | None = Field(default=None, ge=1)
    epsilon: float = Field(default=DEFAULT_EPSILON, gt=0)
    lambda_value: int | None = Field(default=None, alias="lambda")
    all_lambda: bool = False
    bound: int | None = Field(default=None, ge=1)
    trials: int | None = Field(default=None, ge=0)
    seed: int = DEFAULT_SEED
    workers: int = Field(default=1, ge=1)
    format: OutputFormat = OutputFormat.JSON
    out: str | None = None
    timing: bool = False

    @field_validator("p")
    @classmethod
    def _odd_prime(cls, value: int | None) -> int | None:
        if value is not None and not is_odd_prime(value):
            raise ValueError(ErrorsModArith.not_odd_prime.format(value))
        return value

    @field_validator("L")
    @classmethod
    def _offsets(cls, value: list[int] | None) -> list[int] | None:
        for offset in value or []:
            if offset < 0:
                raise ValueError(ErrorsConfig.negative_offset.format(offset))
        return value

    @field_validator("N")
    @classmethod
    def _lengths(cls, value: list[int] | None, info: ValidationInfo) -> list[int] | None:
        if value is None:
            return value
        for length in value:
            if length < 1:
                raise ValueError(ErrorsConfig.nonpositive_length.format(length))
        name = info.data.get("experiment")
        p = info.data.get("p")
        for length in value:
            if name == ExperimentName.QUOTIENT and length < 2:
                raise ValueError(ErrorsResidueSets.window_too_short.format(length))
            if p is None:
                continue
            for offset in info.data.get("L") or [0]:
                if offset + length >= p:
                    raise ValueError(ErrorsConfig.window_beyond_p.format(offset, length, p))
            if name in (ExperimentName.CHARSUM, ExperimentName.J7) and 2 * length > p - 1:
                raise ValueError(ErrorsCharacterSums.interval_range.format(length, p - 1))
            if name == ExperimentName.FAREY and length * length >= p:
                raise ValueError(ErrorsResidueSets.farey_range.format(length, p))
        return value

    @field_validator("j")
    @classmethod
    def _degree_range(cls, value: int | None, info: ValidationInfo) -> int | None:
        p = info.data.get("p")
        if value is not None and p is not None and value > p - 1:
            raise ValueError(ErrorsCurveSums.degree_range.format(value, p - 1))
        return value

    @field_validator("k")
    @classmethod
    def _degree_order(cls, value: int | None, info: ValidationInfo) -> int | None:
        j = info.data.get("j")
        if value is not None and j is not None and value >= j:
            raise ValueError(ErrorsCurveSums.degree_order.format(j, value))
        return value

    @model_validator(mode="after")
    def _experiment_requirements(self) -> ExperimentConfig:
        name = self.experiment
        has_range = self.p_min is not None or self.p_max is not None
        if self.p is not None and has_range:
            raise ValueError(ErrorsConfig.exclusive_fields.format("p", "p_min/p_max"))
        if has_range:
            if self.p_min is None or self.p_max is None or self.p_min > self.p_max or self.p_max < 3:
                raise ValueError(ErrorsConfig.prime_range.format(self.p_min, self.p_max))
        if name in SINGLE_PRIME_EXPERIMENTS and self.p is None:
            raise ValueError(ErrorsConfig.missing_field.format(name, "p"))
        if name not in SINGLE_PRIME_EXPERIMENTS and self.p is None and not has_range:
            raise ValueError(ErrorsConfig.missing_field.format(name, "p or p_min/p_max"))
        if name in REQUIRES_N and not self.N:
            raise ValueError(ErrorsConfig.missing_field.format(name, "N"))
        if name in (ExperimentName.XJ, ExperimentName.J7) and len(self.N or []) != 1:
            raise ValueError(ErrorsConfig.missing_field.format(name, "exactly one N"))
        if name in (ExperimentName.XJ, ExperimentName.INCLUSION) and self.L is not None and len(self.L) != 1:
            raise ValueError(ErrorsConfig.missing_field.format(name, "at most one L"))
        if self.lambda_value is not None and self.all_lambda:
            raise ValueError(ErrorsConfig.exclusive_fields.format("lambda", "all_lambda"))
        if self.p is not None and self.lambda_value is not None and self.lambda_value % self.p == 0:
            raise ValueError(ErrorsConfig.invalid_field.format("lambda", "zero modulo p"))
        if (self.j is None) != (self.k is None):
            raise ValueError(ErrorsConfig.missing_field.format(name, "both j and k"))
        return self

    @property
    def params(self) -> dict[str, Any]:
        """Parameters echoed into reports; output and worker settings are left out."""
        return self.model_dump(
            mode="json",
            by_alias=True,
            exclude={"workers", "format", "out", "timing"},
        )


def _field_from_error(error: ValidationError) -> tuple[str, str]:
    details = error.errors()
    if not details:
        return "config", str(error)
    first = details[0]
    loc = [str(part) for part in first.get("loc", ())]
    field = ".".join(loc) if loc else "config"
    message = str(first.get("msg", error)).removeprefix("Value error, ")
    return field, message


def parse_config(data: dict[str, Any]) -> ExperimentConfig:
    """Validate raw parameters, naming the offending field on failure."""
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as error:
        field, message = _field_from_error(error)
        raise ExperimentConfigError(ErrorsConfig.invalid_field.format(field, message), field=field) from error
