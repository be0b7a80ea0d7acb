"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Report Tests
"""

# Libraries
import json

import pytest

from Catalog.reports import REPORT_SCHEMA, emit_report
from Catalog.verify_suites import VerifyItem, VerifyReport
from Engine.hgs_count import CountMethod, CountResult
from Utilities.error_tools import *


def _result(**overrides) -> CountResult:
    values = dict(g_label="S5", n_label="S5", value=32, method=CountMethod.FORMULA_SN, runtime_ms=1.5)
    values.update(overrides)
    return CountResult(**values)


def test_empty_table_has_only_header():
    lines = emit_report([], "table").splitlines()
    assert len(lines) == 2
    assert lines[0].split() == ["G", "N", "method", "value", "runtime-ms", "checkpoint"]


def test_count_table_rows():
    text = emit_report([_result(), _result(n_label="PGL(2,9)", value=92, conditional=True,
                                           checkpoint_id="s6-pgl.ckpt@12")], "table")
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[2].split() == ["S5", "S5", "formula-sn", "32", "1.5", "-"]
    assert "92*" in lines[3]
    assert lines[3].endswith("s6-pgl.ckpt@12")


def test_count_json_schema():
    payload = json.loads(emit_report([_result()], "json"))
    assert payload["schema"] == REPORT_SCHEMA
    assert payload["kind"] == "count"
    assert payload["rows"][0]["value"] == 32
    assert payload["rows"][0]["method"] == "formula-sn"


def test_output_is_deterministic():
    rows = [_result(), _result(n_label="A5xC2", value=20)]
    assert emit_report(rows, "json") == emit_report(rows, "json")


def test_unknown_format():
    with pytest.raises(PreconditionError):
        emit_report([_result()], "csv")


def test_verify_report_table_and_json():
    report = VerifyReport(suite="small", items=[
        VerifyItem(name="e(C4, V4) Byott", expected="1", observed="1", passed=True),
        VerifyItem(name="e(V4, C4) Byott", expected="3", observed="2", passed=False),
    ])
    lines = emit_report(report, "table").splitlines()
    assert lines[-1] == "suite small: 1 passed, 1 failed"
    assert lines[2].split()[-1] == "PASS"
    assert lines[3].split()[-1] == "FAIL"

    payload = json.loads(emit_report(report, "json"))
    assert payload["kind"] == "verify"
    assert payload["passed"] == 1
    assert payload["failed"] == 1
    assert not report.ok
