"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Database Tests
"""

# Libraries
import pytest

import Database
from Catalog.verify_suites import VerifyItem, VerifyReport
from Database.connector import database_instance
from Database.models import *
from Engine.hgs_count import CountMethod, CountResult


@pytest.fixture(autouse=True)
def fresh_database():
    database_instance.configure("sqlite:///:memory:")
    yield database_instance


def _result(g_label: str, n_label: str, value: int) -> CountResult:
    return CountResult(g_label=g_label, n_label=n_label, value=value, method=CountMethod.BYOTT, runtime_ms=3.5)


def test_save_and_list_results():
    assert Database.save_count_result(_result("S5", "S5", 32))
    assert Database.save_count_result(_result("S5", "A5xC2", 20))
    assert Database.save_count_result(_result("PGL(2,9)", "M10", 60))

    rows = Database.get_all_count_results()
    assert [row["value"] for row in rows] == [60, 20, 32]
    assert rows[0]["method"] == "byott"
    assert rows[0]["created_at"] is not None

    ascending = Database.get_all_count_results(order=Order.ASC)
    assert [row["value"] for row in ascending] == [32, 20, 60]


def test_filter_results():
    Database.save_count_result(_result("S5", "S5", 32))
    Database.save_count_result(_result("S5", "A5xC2", 20))
    Database.save_count_result(_result("PGL(2,9)", "M10", 60))

    assert len(Database.get_all_count_results(g_label="S5")) == 2
    rows = Database.get_all_count_results(g_label="S5", n_label="A5xC2")
    assert len(rows) == 1
    assert rows[0]["value"] == 20
    assert Database.get_all_count_results(g_label="A6") == []


def test_conditional_flag_is_stored():
    result = _result("S7", "S7", 212).model_copy(update={"conditional": True, "checkpoint_id": "s7.ckpt@4"})
    Database.save_count_result(result)
    row = Database.get_all_count_results()[0]
    assert row["conditional"] is True
    assert row["checkpoint_id"] == "s7.ckpt@4"


def test_save_verify_run(fresh_database):
    report = VerifyReport(suite="small", items=[
        VerifyItem(name="a", expected="1", observed="1", passed=True),
        VerifyItem(name="b", expected="1", observed="0", passed=False),
    ])
    assert Database.save_verify_run(report)

    with fresh_database.get_pre_session()() as session:
        run = session.query(VerifyRunsTable).one()
        assert (run.suite, run.passed, run.failed) == ("small", 1, 1)
