"""Result records returned by the experiment-level operations."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True, slots=True)
class InclusionWitness:
    m: int
    numerator_arg: int
    denominator_arg: int


@dataclass(frozen=True, slots=True)
class InclusionReport:
    holds: bool
    witnesses: list[InclusionWitness]
    missing: int | None = None


@dataclass(frozen=True, slots=True)
class RuzsaReport:
    lhs: int
    rhs: float
    holds: bool
    sizes: tuple[int, int, int] = (0, 0, 0)


@dataclass(frozen=True, slots=True)
class DensityRow:
    p: int
    distinct: int
    density: float


@dataclass(frozen=True, slots=True)
class DensityReport:
    rows: list[DensityRow]
    mean: float
    deviation: float


@dataclass(frozen=True, slots=True)
class FareyReport:
    N: int
    coprime_pairs: int
    distinct_residues: int
    farey_ratio: float

    @property
    def counts_equal(self) -> bool:
        return self.coprime_pairs == self.distinct_residues


@dataclass(frozen=True, slots=True)
class QuotientGrowthRow:
    L: int
    N: int
    set_card: int
    quotient_card: int
    ratio: float
    set_ratio: float
    lower_bound_holds: bool
    square_bound_holds: bool

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, slots=True)
class ProductGrowthRow:
    N: int
    set_card: int
    quotient_card: int
    product_card: int
    c1_estimate: float
    ruzsa_chain_holds: bool

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, slots=True)
class SmallQuotientReport:
    N: int
    ratios_checked: int
    missing: list[tuple[int, int]]
    product_card: int

    @property
    def holds(self) -> bool:
        return not self.missing


@dataclass(frozen=True, slots=True)
class BombieriReport:
    max_modulus: float
    argmax: tuple[int, int]
    bound: float
    holds: bool
    point_count: int
    full_scan: bool


@dataclass(frozen=True, slots=True)
class XjRow:
    j: int
    card: int
    new_elements: int
    target: float
    card_floor: float
    card_floor_holds: bool
    inclusion_exclusion_floor: int
    inclusion_exclusion_holds: bool
    overlap_bounds_hold: bool
    j_counts: dict[int, int] = field(default_factory=dict)
    overlaps: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, slots=True)
class XjReport:
    rows: list[XjRow]
    union_card: int
    union_target: float
    union_witnessed: int
    union_unwitnessed: int
    union_in_quotient: bool


@dataclass(frozen=True, slots=True)
class MaxDoubleSumReport:
    argmax: int
    max_modulus: float
    bound: float
    ratio: float


@dataclass(frozen=True, slots=True)
class ParsevalReport:
    lhs: float
    rhs: int
    holds: bool


@dataclass(frozen=True, slots=True)
class CoverageReport:
    B_star: int | None
    coverage: list[float]
    first_bound: dict[int, int]


@dataclass(frozen=True, slots=True)
class TrendReport:
    exponent: float
    intercept: float
    residuals: list[float]
    ratios: list[float]
