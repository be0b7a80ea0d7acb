"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Report Part
"""

# Libraries
from __future__ import annotations

from typing import Literal, Sequence

import json

from pydantic import BaseModel

from Engine.hgs_count import CountResult
from Utilities.error_tools import *

REPORT_SCHEMA = "hgs-report/1"

COUNT_COLUMNS: tuple[tuple[str, int], ...] = (
    ("G", 14), ("N", 14), ("method", 16), ("value", 8), ("runtime-ms", 12), ("checkpoint", 20),
)
VERIFY_COLUMNS: tuple[tuple[str, int], ...] = (
    ("item", 52), ("expected", 18), ("observed", 18), ("status", 6),
)


def _row(values: Sequence[str], columns: tuple[tuple[str, int], ...]) -> str:
    return " ".join(str(value).ljust(width) for value, (_, width) in zip(values, columns)).rstrip()


def _table(rows: list[list[str]], columns: tuple[tuple[str, int], ...]) -> str:
    lines = [_row([name for name, _ in columns], columns),
             _row(["-" * width for _, width in columns], columns)]
    lines.extend(_row(row, columns) for row in rows)
    return "\n".join(lines)


def _count_row(result: CountResult) -> list[str]:
    value = f"{result.value}*" if result.conditional else str(result.value)
    return [result.g_label, result.n_label, result.method.value, value, f"{result.runtime_ms:.1f}",
            result.checkpoint_id or "-"]


def emit_report(results: Sequence[CountResult] | BaseModel, fmt: Literal["table", "json"] = "table") -> str:
    """
    계산 결과 또는 검증 보고서를 표나 JSON 으로 출력하는 기능
    :param results: CountResult 목록 또는 VerifyReport
    :param fmt: table | json
    :return: 출력 문자열 (같은 입력이면 항상 같은 출력)
    """
    if fmt not in ("table", "json"):
        raise PreconditionError(f"unknown report format {fmt}")

    if isinstance(results, BaseModel):
        # VerifyReport
        payload = results.model_dump(mode="json")
        if fmt == "json":
            return json.dumps({"schema": REPORT_SCHEMA, "kind": "verify", **payload}, indent=2, sort_keys=True)
        rows = [[item["name"], item["expected"], item["observed"], "PASS" if item["passed"] else "FAIL"]
                for item in payload["items"]]
        summary = f"suite {payload['suite']}: {payload['passed']} passed, {payload['failed']} failed"
        return _table(rows, VERIFY_COLUMNS) + "\n" + summary

    if fmt == "json":
        rows = [result.model_dump(mode="json") for result in results]
        return json.dumps({"schema": REPORT_SCHEMA, "kind": "count", "rows": rows}, indent=2, sort_keys=True)
    return _table([_count_row(result) for result in results], COUNT_COLUMNS)


__all__ = ["REPORT_SCHEMA", "emit_report"]
