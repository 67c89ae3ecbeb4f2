"""Check reports and their NDJSON/CSV serializations."""
from __future__ import annotations

import csv
import json
import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

Number = float | list[float] | None


class CheckReport(BaseModel):
    """One verification check: what was computed, against what, and how close.

    `computed` and `reference` are numbers or [re, im] pairs; both are None
    when the check could not run (the error message then sits in params).
    `pass` is determined by the check's error mode: absolute, relative, or a
    floor (computed must reach the reference from above).
    """

    model_config = ConfigDict(populate_by_name=True)

    check: str
    params: dict[str, Any]
    computed: Number
    reference: Number
    abs_error: float | None
    rel_error: float | None
    tolerance: float
    pass_: bool = Field(alias="pass")
    cutoff: int
    safe_sector: int
    runtime_ms: int


def make_report(
    check: str,
    params: dict[str, Any],
    computed,
    reference,
    tolerance: float,
    *,
    mode: str = "abs",
    cutoff: int = 0,
    safe_sector: int = 0,
    runtime_ms: int = 0,
) -> CheckReport:
    """Build a report, deriving errors and pass/fail from the mode.

    mode "abs": pass iff abs_error <= tolerance.
    mode "rel": pass iff rel_error <= tolerance.
    mode "floor": computed must be >= reference (witness lower bounds);
    abs_error is the shortfall, so pass iff abs_error <= tolerance still holds.
    """
    comp = _as_number(computed)
    ref = _as_number(reference)
    if comp is None or ref is None:
        return CheckReport(
            check=check,
            params=params,
            computed=comp,
            reference=ref,
            abs_error=None,
            rel_error=None,
            tolerance=tolerance,
            pass_=False,
            cutoff=cutoff,
            safe_sector=safe_sector,
            runtime_ms=runtime_ms,
        )
    distance = _distance(comp, ref)
    scale = _magnitude(ref)
    # a zero reference has no scale: rel_error stays unset (null in the stream)
    if mode == "floor":
        shortfall = max(0.0, _scalar(ref) - _scalar(comp))
        abs_error = shortfall
        rel_error = shortfall / scale if scale > 0 else None
        passed = abs_error <= tolerance
    elif mode == "rel":
        abs_error = distance
        rel_error = distance / scale if scale > 0 else None
        passed = rel_error <= tolerance if rel_error is not None else distance == 0.0
    else:
        abs_error = distance
        rel_error = distance / scale if scale > 0 else None
        passed = abs_error <= tolerance
    return CheckReport(
        check=check,
        params=params,
        computed=comp,
        reference=ref,
        abs_error=abs_error,
        rel_error=rel_error,
        tolerance=tolerance,
        pass_=passed,
        cutoff=cutoff,
        safe_sector=safe_sector,
        runtime_ms=runtime_ms,
    )


def failure_report(
    check: str,
    params: dict[str, Any],
    error: Exception,
    tolerance: float,
    *,
    cutoff: int = 0,
    safe_sector: int = 0,
    runtime_ms: int = 0,
) -> CheckReport:
    """A structured record of a check that raised instead of computing."""
    annotated = dict(params)
    annotated["error"] = f"{type(error).__name__}: {error}"
    return CheckReport(
        check=check,
        params=annotated,
        computed=None,
        reference=None,
        abs_error=None,
        rel_error=None,
        tolerance=tolerance,
        pass_=False,
        cutoff=cutoff,
        safe_sector=safe_sector,
        runtime_ms=runtime_ms,
    )


def _as_number(value) -> Number:
    if value is None:
        return None
    if isinstance(value, complex):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (list, tuple)):
        return [float(v) for v in value]
    return float(value)


def _scalar(value: Number) -> float:
    if isinstance(value, list):
        return value[0]
    return value


def _magnitude(value: Number) -> float:
    if isinstance(value, list):
        return math.hypot(*value)
    return abs(value)


def _distance(a: Number, b: Number) -> float:
    if isinstance(a, list) or isinstance(b, list):
        av = a if isinstance(a, list) else [a, 0.0]
        bv = b if isinstance(b, list) else [b, 0.0]
        return math.hypot(*(x - y for x, y in zip(av, bv)))
    return abs(a - b)


CSV_COLUMNS = [
    "check",
    "params",
    "computed",
    "reference",
    "abs_error",
    "rel_error",
    "tolerance",
    "pass",
    "cutoff",
    "safe_sector",
    "runtime_ms",
]


def _sig15(value) -> str:
    return f"{value:.15g}"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _sig15(value)
    if isinstance(value, list):
        return json.dumps([json.loads(_sig15(v)) for v in value])
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def write_ndjson(reports: list[CheckReport], stream) -> None:
    for report in reports:
        stream.write(json.dumps(report.model_dump(by_alias=True), sort_keys=True))
        stream.write("\n")


def write_csv(reports: list[CheckReport], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        row = report.model_dump(by_alias=True)
        writer.writerow([_csv_cell(row[col]) for col in CSV_COLUMNS])
