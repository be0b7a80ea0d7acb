"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Group File Tests
"""

# Libraries
import pytest

from Catalog.group_files import load_group_file, load_group_text, parse_group_text
from Engine.group_core import PermutationSource, TableSource
from Utilities.error_tools import *

S4_FILE = """# symmetric group on four points
perm 4
(0 1 2 3)

(0 1)   # transposition
"""


def test_parse_permutation_file():
    source = parse_group_text(S4_FILE, name="S4")
    assert isinstance(source, PermutationSource)
    assert source.degree == 4
    assert len(source.generators) == 2


def test_load_permutation_file(group_file):
    G = load_group_file(group_file(S4_FILE, "S4.grp"))
    assert G.name == "S4"
    assert G.order == 24


def test_load_table_file():
    source = parse_group_text("table 2\n0 1\n1 0\n")
    assert isinstance(source, TableSource)
    assert load_group_text("table 2\n0 1\n1 0\n", name="C2").order == 2


@pytest.mark.parametrize("text, line", [
    ("group 4\n(0 1)\n", 1),
    ("perm x\n", 1),
    ("perm 4\n(0 1)\n(0 9)\n", 3),
    ("# header comment\n\nperm 3\n(0 1) junk\n", 4),
    ("table 3\n0 1 2\n1 2 0\n", 3),
    ("table 2\n0 1\n1 a\n", 3),
    ("table 2\n0 1\n1 5\n", 3),
])
def test_parse_errors_report_line_numbers(text, line):
    with pytest.raises(GroupParseError) as error:
        parse_group_text(text)
    assert error.value.line == line
    assert error.value.exit_code == 2


def test_empty_file_is_a_parse_error():
    with pytest.raises(GroupParseError):
        parse_group_text("# nothing here\n")


def test_invalid_table_is_rejected():
    with pytest.raises(TableError):
        load_group_text("table 2\n0 1\n1 1\n")


def test_missing_file(tmp_path):
    with pytest.raises(UnknownGroupError):
        load_group_file(tmp_path / "missing.grp")
