from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class Violation(BaseModel):
    """A failed exact check, with the inputs that produced it."""

    model_config = ConfigDict(extra="forbid")

    check: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    detail: str = ""


class ExperimentReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    experiment: str
    params: dict[str, Any] = Field(default_factory=dict)
    rows: list[dict[str, Any]] = Field(default_factory=list)
    violations: list[Violation] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    summary: dict[str, Any] = Field(default_factory=dict)
    timing: dict[str, float] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add_violation(
        self,
        check: str,
        detail: str = "",
        **inputs: Any,
    ) -> None:
        self.violations.append(Violation(check=check, inputs=inputs, detail=detail))
