from .config import ExperimentConfig, parse_config
from .report import ExperimentReport, Violation

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "Violation",
    "parse_config",
]
