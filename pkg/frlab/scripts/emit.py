from __future__ import annotations

import asyncio
import csv
import io
import json
import sys
from typing import Any

from aiofiles import open as aio_file_open

from ..const.const import CSV_FLOAT_PRECISION
from ..const.enums import OutputFormat
from ..data_models.report import ExperimentReport
from ..exceptions.error_strings import ErrorsReport
from ..exceptions.exceptions import ReportWriteError


def render_json(report: ExperimentReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, allow_nan=True) + "\n"


def _csv_cell(value: Any) -> Any:
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, f".{CSV_FLOAT_PRECISION}g")
    return value


def render_csv(report: ExperimentReport) -> str:
    if not report.rows:
        return ""
    header: list[str] = list()
    for row in report.rows:
        for key in row:
            if key not in header:
                header.append(key)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in report.rows:
        writer.writerow([_csv_cell(row.get(key)) for key in header])
    return buffer.getvalue()


def render_report(
    report: ExperimentReport,
    fmt: OutputFormat,
) -> str:
    if fmt == OutputFormat.CSV:
        return render_csv(report)
    return render_json(report)


async def async_emit_report(
    report: ExperimentReport,
    fmt: OutputFormat,
    path: str | None,
) -> None:
    text = render_report(report, fmt)
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        async with aio_file_open(path, mode="w", encoding="utf-8", newline="") as f:
            await f.write(text)
    except OSError as error:
        raise ReportWriteError(ErrorsReport.write_failed.format(path, error)) from error


def emit_report(
    report: ExperimentReport,
    fmt: OutputFormat,
    path: str | None,
) -> None:
    asyncio.run(async_emit_report(report, fmt, path))
