"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Hopf-Galois Counting Tests
"""

# Libraries
from math import factorial

import numpy as np
import pytest

from Catalog.catalog import resolve_spec
from Engine.hgs_count import (CountMethod, count_by_method, e_brute_perm, e_byott, e_formula_sn,
                              e_formula_theorem1, e_formula_theorem_old, e_fpf_inhol, e_holomorph_dual,
                              reverse_duality_profile, semiregular_permutations)
from Utilities.error_tools import *


# ========== 닫힌 공식 ==========
def test_formulas_for_s5(s5):
    old = e_formula_theorem_old(s5)
    assert old.value == 32
    assert old.method == CountMethod.FORMULA_THM_OLD
    assert not old.conditional

    split = e_formula_theorem1(s5)
    assert split.value == 20
    assert split.n_label == "Soc(S5)xC2"


@pytest.mark.parametrize("n, kind, expected", [(5, "Sn", 32), (5, "AnxC2", 20), (6, "Sn", 92), (6, "AnxC2", 60)])
def test_symmetric_formulas(n, kind, expected):
    assert e_formula_sn(n, kind).value == expected


def test_symmetric_formula_above_table_cap():
    # S7 은 곱셈표 없이 순환형으로만 셈: 짝 involution 105, 홀 involution 126
    assert e_formula_sn(7, "Sn").value == 2 + 2 * 105
    assert e_formula_sn(7, "AnxC2").value == 2 * (21 + 105)
    with pytest.raises(PreconditionError):
        e_formula_sn(4, "Sn")


def test_formulas_need_almost_simple_groups(small_groups):
    with pytest.raises(PreconditionError):
        e_formula_theorem_old(small_groups["S3"])


# ========== 열거 경로 ==========
@pytest.mark.parametrize("g_label, n_label, expected", [
    ("C4", "C4", 1), ("C4", "V4", 1), ("V4", "V4", 1), ("V4", "C4", 3),
])
def test_byott_small_fixtures(small_groups, g_label, n_label, expected):
    result = e_byott(small_groups[g_label], small_groups[n_label])
    assert result.value == expected
    assert result.method == CountMethod.BYOTT


def test_byott_needs_equal_orders(small_groups):
    with pytest.raises(PreconditionError):
        e_byott(small_groups["C4"], small_groups["C6"])


def test_semiregular_permutations_are_fixed_point_free():
    perms = list(semiregular_permutations(4))
    # 4-순환 6 개, (2,2) 형 3 개
    assert len(perms) == 9
    for p in perms:
        assert not (p == np.arange(4)).any()
    assert all(p[0] == 2 for p in semiregular_permutations(4, first_image=2))


def test_brute_census_fixtures(small_groups):
    C4, V4 = small_groups["C4"], small_groups["V4"]
    assert e_brute_perm(C4, types=[C4, V4]).counts == {"C4": 1, "V4": 1}
    assert e_brute_perm(V4, types=[C4, V4]).counts == {"V4": 1, "C4": 3}


def test_brute_census_labels_unknown_types(small_groups):
    census = e_brute_perm(small_groups["C4"])
    assert sorted(census.counts) == ["order4-type1", "order4-type2"]
    assert sum(census.counts.values()) == len(census.subgroups) == 2


@pytest.mark.parametrize("order", [6, pytest.param(8, marks=pytest.mark.slow)])
def test_brute_force_agrees_with_byott(small_groups, order):
    groups = [G for G in small_groups.values() if G.order == order]
    for G in groups:
        census = e_brute_perm(G, types=groups)
        for N in groups:
            assert census.count_for(N) == e_byott(G, N).value


def test_brute_force_cap():
    C9 = resolve_spec("C9")
    with pytest.raises(CapExceededError):
        e_brute_perm(C9)


# ========== 방법 선택 ==========
def test_count_by_method_dispatch(s5, a5xc2, small_groups):
    assert count_by_method(s5, s5, "formula").value == 32
    assert count_by_method(s5, a5xc2, "formula").value == 20

    brute = count_by_method(small_groups["V4"], small_groups["C4"], "brute")
    assert brute.value == 3
    assert brute.method == CountMethod.BRUTE_PERM

    with pytest.raises(PreconditionError):
        count_by_method(s5, s5, "guess")
    with pytest.raises(PreconditionError):
        count_by_method(small_groups["C4"], small_groups["V4"], "formula")


# ========== 위수 120 ==========
@pytest.mark.slow
def test_order_120_paths_agree(s5, a5xc2):
    assert e_byott(s5, s5).value == 32
    assert e_byott(s5, a5xc2).value == 20
    assert e_fpf_inhol(s5, a5xc2).value == 20
    assert e_holomorph_dual(s5, s5).value == 32
    assert e_holomorph_dual(s5, a5xc2).value == 20


@pytest.mark.slow
def test_reverse_duality_for_s5(s5, a5xc2):
    profile = reverse_duality_profile(s5, a5xc2)
    assert profile.examined == 10
    assert profile.exactly_one_holds


def test_holomorph_dual_needs_socle_copy(s5):
    with pytest.raises(PreconditionError):
        e_holomorph_dual(s5, resolve_spec("C120"))
