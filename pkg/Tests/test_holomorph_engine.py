"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Holomorph Engine Tests
"""

# Libraries
import numpy as np
import pytest

from Engine.group_core import center, normal_subgroups
from Engine.holomorph_engine import (build_holomorph, check_crossed_relation, check_h_properties,
                                     crossed_homomorphisms, derive_h, dual_regular_subgroup, holomorph_is_normalizer,
                                     induce_on_quotient, lambda_generators, normalized_by, read_checkpoint,
                                     RegularSubgroup, regular_lambda, regular_rho,
                                     regular_subgroups_in_holomorph, write_checkpoint)
from Engine.morphisms import automorphism_group, enumerate_homomorphisms
from Utilities.error_tools import *


def test_holomorph_pairs_act_as_permutations(small_groups):
    hol = build_holomorph(small_groups["S3"])
    assert hol.order == 36
    for first in ((1, 2), (3, 0), (5, 4)):
        for second in ((2, 1), (4, 3)):
            product = hol.multiply(first, second)
            composed = hol.as_permutation(first)[hol.as_permutation(second)]
            assert np.array_equal(hol.as_permutation(product), composed)
            assert hol.decompose(hol.as_permutation(product)) == product


def test_lambda_and_rho_are_regular_and_dual(small_groups):
    S3 = small_groups["S3"]
    lam, rho = regular_lambda(S3), regular_rho(S3)
    assert lam.is_regular() and rho.is_regular()
    assert lam != rho
    assert dual_regular_subgroup(lam) == rho
    assert dual_regular_subgroup(dual_regular_subgroup(lam)) == lam

    C4 = small_groups["C4"]
    assert dual_regular_subgroup(regular_lambda(C4)) == regular_lambda(C4)


def test_lambda_normalizes_its_holomorph(small_groups):
    G = small_groups["Q8"]
    hol = build_holomorph(G)
    assert hol.contains_all(regular_lambda(G).perms)
    assert hol.contains_all(regular_rho(G).perms)
    assert normalized_by(regular_rho(G), lambda_generators(G))


def test_normal_klein_subgroup_of_perm_c4(small_groups):
    C4 = small_groups["C4"]
    klein = RegularSubgroup(np.array([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]),
                            ambient="Perm(C4)")
    transposition = np.array([[1, 0, 2, 3]])
    assert klein.is_regular()
    assert normalized_by(klein, lambda_generators(C4))
    assert normalized_by(klein, transposition)
    assert not normalized_by(regular_lambda(C4), transposition)


@pytest.mark.parametrize("label", ["C4", "V4", "C6", "S3"])
def test_holomorph_is_normalizer(small_groups, label):
    assert holomorph_is_normalizer(small_groups[label])


def test_crossed_homomorphisms_satisfy_h_properties(small_groups):
    G, N = small_groups["S3"], small_groups["S3"]
    aut = automorphism_group(N)
    seen = 0
    for f in enumerate_homomorphisms(G, aut.carrier):
        for c in crossed_homomorphisms(f, aut, bijective_only=False):
            assert check_crossed_relation(f, c.g, aut)
            assert all(check_h_properties(c).values())
            seen += 1
    assert seen > 0


@pytest.mark.parametrize("label", ["Q8", "D4", "S3"])
def test_derive_h_for_trivial_f(small_groups, label):
    N = small_groups[label]
    aut = automorphism_group(N)
    trivial = next(f for f in enumerate_homomorphisms(N, aut.carrier) if f.kernel.is_whole())
    Z = center(N)
    seen = 0
    for c in crossed_homomorphisms(trivial, aut, bijective_only=False):
        h = derive_h(c)
        assert h.target is aut.carrier
        assert np.array_equal(h.kernel.members, np.flatnonzero(Z.mask[c.g]))
        if c.bijective:
            assert h.kernel == Z
            seen += 1
    assert seen == aut.order


def test_induce_on_characteristic_quotient(small_groups):
    N = small_groups["C4"]
    aut = automorphism_group(N)
    Lambda = next(entry for entry in normal_subgroups(N) if entry.subgroup.order == 2)
    assert Lambda.characteristic is True
    for f in enumerate_homomorphisms(N, aut.carrier):
        for c in crossed_homomorphisms(f, aut, bijective_only=True):
            induced, preimage = induce_on_quotient(c, Lambda)
            assert induced.base.order == 2
            assert preimage.order == 2


@pytest.mark.parametrize("n_label, g_label, expected", [
    ("C4", "C4", 1), ("C4", "V4", 1), ("V4", "V4", 1), ("V4", "C4", 3),
])
def test_regular_subgroup_counts(small_groups, n_label, g_label, expected):
    result = regular_subgroups_in_holomorph(small_groups[n_label], small_groups[g_label], collect=True)
    assert result.subgroup_count == expected
    assert len(result.samples) == expected
    assert all(D.is_regular() for D in result.samples)


def test_checkpoint_resume_reproduces_count(small_groups, tmp_path):
    G, N = small_groups["D4"], small_groups["Q8"]
    full = regular_subgroups_in_holomorph(N, G)

    path = tmp_path / "d4-q8.ckpt"
    written = regular_subgroups_in_holomorph(N, G, checkpoint=path)
    state = read_checkpoint(path)
    assert state["pair_count"] == full.pair_count == written.pair_count

    # f-index 0 은 자명한 f 이고 D4, Q8 은 동형이 아니므로 기여가 없음
    write_checkpoint(path, G, N, 0, 0)
    resumed = regular_subgroups_in_holomorph(N, G, resume=path)
    assert resumed.checkpoint_id == "d4-q8.ckpt@0"
    assert resumed.pair_count == full.pair_count


def test_checkpoint_rejects_other_groups(small_groups, tmp_path):
    path = tmp_path / "c4.ckpt"
    write_checkpoint(path, small_groups["C4"], small_groups["C4"], 0, 0)
    with pytest.raises(CheckpointError):
        regular_subgroups_in_holomorph(small_groups["V4"], small_groups["V4"], resume=path)

    broken = tmp_path / "broken.ckpt"
    broken.write_text("not a checkpoint\n", encoding="utf-8")
    with pytest.raises(CheckpointError):
        read_checkpoint(broken)
