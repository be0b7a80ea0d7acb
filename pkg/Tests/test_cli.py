"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Command Line Tests
"""

# Libraries
import json

import pytest

import hgs


def test_info(capsys):
    assert hgs.main(["info", "-G", "S3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("S3: order 6")
    assert "2:3" in out


def test_info_json(capsys):
    assert hgs.main(["info", "-G", "Q8", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 8
    assert payload["order_census"] == {"1": 1, "2": 1, "4": 6}


def test_count_table(capsys):
    assert hgs.main(["count", "-G", "V4", "-N", "C4", "--method", "byott"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[2].split()[:4] == ["V4", "C4", "byott", "3"]


def test_count_json(capsys):
    assert hgs.main(["count", "-G", "S5", "-N", "S5", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rows"][0]["value"] == 32


def test_catalog_list(capsys):
    assert hgs.main(["catalog", "list"]) == 0
    assert "PGL(2,q)" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["info", "-G", "X5"],
    ["count", "-G", "C4"],
    ["count", "-G", "C4", "-N", "V4", "--method", "guess"],
    ["count", "-G", "C4", "-N", "V4"],
    ["verify", "--suite", "stretch-720"],
    ["launch"],
])
def test_usage_and_input_errors(argv, capsys):
    assert hgs.main(argv) == 2


def test_error_detail_on_stderr(capsys):
    assert hgs.main(["info", "-G", "X5"]) == 2
    assert '"type": "unknown group"' in capsys.readouterr().err


def test_brute_cap_exit_code(capsys):
    assert hgs.main(["count", "-G", "C9", "-N", "C9", "--method", "brute"]) == 3
