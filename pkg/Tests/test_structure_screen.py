"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Structure Screen Tests
"""

# Libraries
import pytest

from Catalog.catalog import resolve_spec
from Engine.group_core import center, normal_subgroups
from Engine.hgs_count import count_by_method
from Engine.morphisms import automorphism_group
from Engine.structure_screen import (StructureKind, Verdict, almost_simple_data, check_theorem_old_hypothesis,
                                     classify_group, every_automorphism_has_fixed_point, inner_is_unique_copy,
                                     out_is_solvable, screen_candidate, splits_over_socle,
                                     verify_condition3_witness)
from Utilities.error_tools import *


@pytest.mark.parametrize("label, kind", [
    ("C4", StructureKind.ABELIAN),
    ("S3", StructureKind.SOLVABLE_OTHER),
    ("A5", StructureKind.SIMPLE),
    ("S5", StructureKind.ALMOST_SIMPLE),
    ("AxCp(A5,2)", StructureKind.DIRECT_PRODUCT),
    ("SL(2,5)", StructureKind.QUASISIMPLE),
])
def test_classify_group(label, kind):
    assert classify_group(resolve_spec(label)).kind == kind


def test_almost_simple_data(s5, a5xc2):
    A, p = almost_simple_data(s5)
    assert (A.order, p) == (60, 2)
    with pytest.raises(PreconditionError):
        almost_simple_data(a5xc2)


def test_screen_allows_product_shape(s5, a5xc2):
    report = screen_candidate(s5, a5xc2)
    assert report.shape_verdict == "allowed-shape"
    assert not report.excluded


def test_screen_excludes_solvable_candidates(s5):
    report = screen_candidate(s5, resolve_spec("C120"))
    assert report.excluded
    assert "solvable" in report.reason
    assert report.certificate["normal_subgroup_orders"][0] == 1


def test_screen_rejects_order_mismatch(s5, a5):
    with pytest.raises(PreconditionError):
        screen_candidate(s5, a5)


def test_screen_runs_conditions_on_perfect_candidates(s5):
    report = screen_candidate(s5, resolve_spec("SL(2,5)"))
    assert report.shape_verdict in ("allowed-shape-perfect", "excluded")
    assert report.cond1.verdict == Verdict.HOLDS
    assert report.cond1.note == "|Z(N)| = 2"


def test_split_criterion(s5):
    report = splits_over_socle(s5)
    assert report.splits
    assert report.outer_order_p == 10
    assert s5.elt_order[report.witness] == 2


def test_hypothesis_for_s5(s5):
    check = check_theorem_old_hypothesis(s5)
    assert check.holds
    assert check.index == 1


def test_simple_group_facts(a5):
    assert every_automorphism_has_fixed_point(a5)
    assert inner_is_unique_copy(a5)
    assert out_is_solvable(a5)


@pytest.mark.slow
def test_sl29_fails_lifting_condition(pgl29):
    SL = resolve_spec("SL(2,9)")
    report = screen_candidate(pgl29, SL)
    assert report.excluded
    assert report.cond3.verdict == Verdict.FAILS
    assert verify_condition3_witness(SL, report.cond3_pairs, 2)


@pytest.mark.slow
def test_m10_does_not_split(m10, pgl29):
    assert not splits_over_socle(m10).splits
    assert splits_over_socle(pgl29).outer_order_p == 36


@pytest.mark.slow
@pytest.mark.parametrize("label, kind", [
    ("M10", StructureKind.ALMOST_SIMPLE),
    ("SL(2,9)", StructureKind.QUASISIMPLE),
    ("AxCp(A6,2)", StructureKind.DIRECT_PRODUCT),
])
def test_classify_order_720(label, kind):
    structure = classify_group(resolve_spec(label))
    assert structure.kind == kind
    if kind == StructureKind.ALMOST_SIMPLE:
        assert (structure.socle.order, structure.index) == (360, 2)
    if kind == StructureKind.DIRECT_PRODUCT:
        assert (structure.socle.order, structure.index) == (360, 2)


@pytest.mark.slow
def test_a6xc2_structure():
    N = resolve_spec("AxCp(A6,2)")
    orders = sorted(entry.subgroup.order for entry in normal_subgroups(N, characteristic=False))
    assert orders == [1, 2, 360, 720]
    assert automorphism_group(N).order == 1440
    assert center(resolve_spec("SL(2,9)")).order == 2


@pytest.mark.slow
def test_screen_order_720(pgl29, m10):
    product = screen_candidate(pgl29, resolve_spec("AxCp(A6,2)"))
    assert product.shape_verdict == "allowed-shape"

    symmetric = screen_candidate(m10, resolve_spec("S6"))
    assert symmetric.shape_verdict == "allowed-shape"
    assert "almost simple" in symmetric.reason

    cyclic = screen_candidate(m10, resolve_spec("C720"))
    assert cyclic.excluded
    assert "solvable" in cyclic.reason


@pytest.mark.slow
@pytest.mark.parametrize("label", ["C120", "S3*C20", "SL(2,5)"])
def test_excluded_candidates_have_no_structures(s5, label):
    # 선별에서 제외된 N 은 Byott 열거로도 0 이어야 함
    N = resolve_spec(label)
    if screen_candidate(s5, N).excluded:
        assert count_by_method(s5, N, "byott").value == 0


def test_screen_reads_product_spellings(s5):
    assert screen_candidate(s5, resolve_spec("C120")).excluded
    assert not screen_candidate(s5, resolve_spec("A5*C2")).excluded
