from __future__ import annotations

import argparse
import asyncio
import os
import sys
from collections.abc import Sequence
from typing import Any

from ..const.const import DEFAULT_EPSILON, DEFAULT_SEED, LOGGER
from ..const.enums import ExitCode, ExperimentName, OutputFormat
from ..data_models.config import ExperimentConfig, parse_config
from ..exceptions.exceptions import (
    ExperimentConfigError,
    FactorialResidueError,
    ReportWriteError,
)
from .emit import async_emit_report
from .experiments import async_run_experiment
from .script_base import configure_logging

EXPERIMENT_HELP = {
    ExperimentName.DENSITY: "Distinct factorial residues |A(0,p-1)| per prime.",
    ExperimentName.QUOTIENT: "Quotient set growth |A/A| over a grid of windows.",
    ExperimentName.INCLUSION: "Interval inclusion {1} u [L+2, L+N] in A/A.",
    ExperimentName.XJ: "X_j sets, J(j,k) overlaps and new-element counts.",
    ExperimentName.CURVE: "Exponential sums over difference curves u(x) - v(y).",
    ExperimentName.CHARSUM: "Factorial double character sums and Parseval checks.",
    ExperimentName.J7: "The 7-factorial count J via characters and by brute force.",
    ExperimentName.REPRESENT: "Seven-factorial representations and the covering bound B*.",
    ExperimentName.RUZSA: "Multiplicative Ruzsa triangle inequality on random triples.",
    ExperimentName.FAREY: "Distinct ratios n/m mod p against coprime pairs.",
    ExperimentName.GROWTH: "|A|, |A/A| and |AA| for A(0,N) with small-N quotients.",
}


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, help="Odd prime modulus.")
    parser.add_argument("--p-min", type=int, help="Lower end of a prime range.")
    parser.add_argument("--p-max", type=int, help="Upper end of a prime range.")
    parser.add_argument("--L", type=int, nargs="+", help="Window offsets.")
    parser.add_argument("--N", type=int, nargs="+", help="Window lengths.")
    parser.add_argument("--j", type=int, help="Degree of u.")
    parser.add_argument("--k", type=int, help="Degree of v.")
    parser.add_argument("--M", type=int, help="Largest j, overriding the epsilon rule.")
    parser.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="Epsilon for M(p, N).")
    lambdas = parser.add_mutually_exclusive_group()
    lambdas.add_argument("--lambda", dest="lambda_value", type=int, help="Target residue.")
    lambdas.add_argument("--all-lambda", action="store_true", help="Every nonzero residue.")
    parser.add_argument("--bound", type=int, help="Argument bound B.")
    parser.add_argument("--trials", type=int, help="Random trials.")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed.")
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1, help="Worker processes.")
    parser.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.JSON,
        help="Report format.",
    )
    parser.add_argument("--out", type=str, help="Report path; standard output when omitted.")
    parser.add_argument("--timing", action="store_true", help="Record wall-clock timing.")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frlab", description="Factorial residue experiments.")
    subparsers = parser.add_subparsers(dest="experiment", required=True)
    for name in ExperimentName:
        _add_common_arguments(subparsers.add_parser(name.value, help=EXPERIMENT_HELP[name]))
    return parser


def get_sys_args(argv: Sequence[str] | None = None) -> dict[str, Any]:
    return vars(build_parser().parse_args(argv))


def config_from_args(sys_args: dict[str, Any]) -> ExperimentConfig:
    data = {key: value for key, value in sys_args.items() if key != "verbose" and value is not None}
    return parse_config(data)


async def main_async(config: ExperimentConfig) -> ExitCode:
    report = await async_run_experiment(config)
    await async_emit_report(report, config.format, config.out)
    return ExitCode.OK if report.ok else ExitCode.VIOLATIONS


def main(argv: Sequence[str] | None = None) -> int:
    sys_args = get_sys_args(argv)
    configure_logging(bool(sys_args.get("verbose")))
    try:
        config = config_from_args(sys_args)
    except ExperimentConfigError as error:
        print(f"frlab: {error}", file=sys.stderr)
        return int(ExitCode.INVALID_INPUT)
    try:
        return int(asyncio.run(main_async(config)))
    except ReportWriteError as error:
        print(f"frlab: {error}", file=sys.stderr)
        return int(ExitCode.INVALID_INPUT)
    except FactorialResidueError as error:
        LOGGER.debug("Invalid input for %s.", config.experiment, exc_info=True)
        print(f"frlab: {error}", file=sys.stderr)
        return int(ExitCode.INVALID_INPUT)


if __name__ == "__main__":
    sys.exit(main())
