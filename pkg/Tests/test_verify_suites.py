"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Verify Suite Tests
"""

# Libraries
import pytest

from Catalog.verify_suites import SUITES, run_verify_suite
from Utilities.error_tools import *


def _assert_ok(report):
    failures = [f"{item.name}: expected {item.expected}, observed {item.observed}"
                for item in report.items if not item.passed]
    assert not failures, failures
    assert report.passed == len(report.items) > 0


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        run_verify_suite("everything")


def test_stretch_needs_permission(monkeypatch):
    monkeypatch.delenv("HGS_ALLOW_STRETCH", raising=False)
    with pytest.raises(PreconditionError):
        run_verify_suite("stretch-720")


@pytest.mark.slow
@pytest.mark.parametrize("suite", [name for name in SUITES if name != "stretch-720"])
def test_suite_passes(suite):
    report = run_verify_suite(suite)
    assert report.suite == suite
    _assert_ok(report)


@pytest.mark.slow
@pytest.mark.stretch
def test_stretch_suite(tmp_path):
    report = run_verify_suite("stretch-720", allow_stretch=True, checkpoint_dir=tmp_path)
    _assert_ok(report)
    assert list(tmp_path.glob("*.ckpt"))
