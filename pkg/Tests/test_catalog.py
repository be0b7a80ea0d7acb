"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Catalog Tests
"""

# Libraries
import pytest

from Catalog.catalog import (EXPECTED_CENSUS, catalog_aut6_tower, catalog_list, resolve_spec, spec_digest)
from Utilities.error_tools import *


@pytest.mark.parametrize("spec, order", [
    ("C1", 1), ("C7", 7), ("D4", 8), ("S1", 1), ("S4", 24), ("A4", 12), ("A5", 60), ("Q8", 8), ("V4", 4),
    ("SL(2,3)", 24), ("PSL(2,7)", 168), ("PGL(2,5)", 120), ("AxCp(A5,2)", 120), ("C2^3", 8), ("S3*C2", 12),
])
def test_resolve_orders(spec, order):
    assert resolve_spec(spec).order == order


def test_named_groups_match_their_census():
    for label in ("C4", "V4", "S3", "D4", "Q8", "A5", "S5", "PSL(2,5)", "SL(2,5)"):
        assert resolve_spec(label).order_statistics() == EXPECTED_CENSUS[label]


def test_product_names():
    assert resolve_spec("C4*C2").name == "C4xC2"
    assert resolve_spec("AxCp(A5,2)").name == "A5xC2"
    assert resolve_spec("C2^3").name == "C2^3"


def test_resolution_is_cached_and_whitespace_insensitive():
    assert resolve_spec("S5") is resolve_spec(" S 5 ")
    assert spec_digest("PGL(2, 5)") == spec_digest("PGL(2,5)")


@pytest.mark.parametrize("spec", ["", "X5", "D2", "C0", "Foo(2,9)", "(C4*C2", "C2^0"])
def test_unknown_specs(spec):
    with pytest.raises(UnknownGroupError) as error:
        resolve_spec(spec)
    assert error.value.exit_code == 2


def test_axcp_needs_prime():
    with pytest.raises(PreconditionError):
        resolve_spec("AxCp(A5,4)")


def test_field_order_limit():
    with pytest.raises(PreconditionError):
        resolve_spec("SL(2,6)")


def test_file_spec(group_file):
    path = group_file("perm 3\n(0 1 2)\n(0 1)\n", "S3file.grp")
    group = resolve_spec(f"file:{path}")
    assert group.order == 6
    assert group.name == "S3file"


def test_file_spec_follows_content(group_file):
    path = group_file("perm 3\n(0 1 2)\n", "changing.grp")
    assert resolve_spec(f"file:{path}").order == 3
    path.write_text("perm 3\n(0 1 2)\n(0 1)\n", encoding="utf-8")
    assert resolve_spec(f"file:{path}").order == 6


def test_missing_file_spec(tmp_path):
    with pytest.raises(UnknownGroupError):
        resolve_spec(f"file:{tmp_path / 'missing.grp'}")


def test_catalog_list():
    labels = [entry["label"] for entry in catalog_list()]
    assert "PGL(2,q)" in labels
    assert "file:path" in labels
    assert all(entry["description"] for entry in catalog_list())


@pytest.mark.slow
def test_aut6_tower():
    tower = catalog_aut6_tower()
    assert tower.groups["Aut(A6)"].order == 1440
    assert set(tower.outer_statistics) == {"S6", "PGL(2,9)", "M10"}
    assert tower.outer_statistics["M10"].get(2, 0) == 0
    assert tower.outer_statistics["PGL(2,9)"][2] == 36
    assert tower.outer_statistics["S6"][2] == 30
    for label in ("S6", "PGL(2,9)", "M10"):
        assert tower.groups[label].order == 720


@pytest.mark.slow
def test_m10_census(m10):
    assert m10.order_statistics() == EXPECTED_CENSUS["M10"]
