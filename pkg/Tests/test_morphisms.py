"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Morphism Tests
"""

# Libraries
import numpy as np
import pytest

from Engine.group_core import center, centralizer, cyclic_group
from Engine.morphisms import (Homomorphism, automorphism_group, conjugation_images, count_homomorphisms,
                              enumerate_homomorphisms, fixed_points, identity_map, index_subgroups_by_kernels)
from Utilities.error_tools import *


@pytest.mark.parametrize("label, expected", [
    ("C4", 2), ("V4", 6), ("C6", 2), ("S3", 6), ("D4", 8), ("Q8", 24), ("C2^3", 168),
])
def test_automorphism_group_orders(small_groups, label, expected):
    assert automorphism_group(small_groups[label]).order == expected


def test_automorphism_group_of_a5(a5, s5):
    aut = automorphism_group(a5)
    assert aut.order == 120
    assert aut.inner.order == 60
    assert automorphism_group(s5).order == 120


def test_automorphism_carrier_composes(small_groups):
    aut = automorphism_group(small_groups["S3"])
    for a in range(aut.order):
        for b in range(aut.order):
            ab = int(aut.carrier.mul[a, b])
            assert np.array_equal(aut.action[ab], aut.action[a][aut.action[b]])


def test_homomorphism_counts(small_groups):
    C2 = cyclic_group(2)
    assert count_homomorphisms(small_groups["S3"], C2) == 2
    assert count_homomorphisms(small_groups["V4"], C2) == 4
    assert count_homomorphisms(small_groups["C4"], small_groups["C4"]) == 4
    assert count_homomorphisms(small_groups["S3"], small_groups["S3"]) == 10


def test_enumeration_is_deterministic_and_valid(small_groups):
    S3 = small_groups["S3"]
    first = [hom.images.tobytes() for hom in enumerate_homomorphisms(S3, S3)]
    second = [hom.images.tobytes() for hom in enumerate_homomorphisms(S3, S3)]
    assert first == second
    assert all(hom.verify() for hom in enumerate_homomorphisms(S3, S3))


def test_enumeration_does_not_depend_on_jobs(small_groups):
    D4, Q8 = small_groups["D4"], small_groups["Q8"]
    serial = [hom.images.tobytes() for hom in enumerate_homomorphisms(D4, Q8, jobs=1)]
    parallel = [hom.images.tobytes() for hom in enumerate_homomorphisms(D4, Q8, jobs=2)]
    assert serial == parallel


def test_kernel_filter(small_groups):
    S3 = small_groups["S3"]
    trivial_kernel = identity_map(S3).kernel
    injective = list(enumerate_homomorphisms(S3, S3, kernel_filter=trivial_kernel))
    assert len(injective) == 6
    assert all(hom.is_injective() for hom in injective)


def test_index_two_subgroups(small_groups):
    assert len(index_subgroups_by_kernels(small_groups["V4"], 2)) == 3
    assert len(index_subgroups_by_kernels(small_groups["S3"], 2)) == 1


def test_homomorphism_requires_identity(small_groups):
    C4 = small_groups["C4"]
    with pytest.raises(PreconditionError):
        Homomorphism(C4, C4, [1, 0, 2, 3])
    with pytest.raises(PreconditionError):
        Homomorphism(C4, C4, [0, 1])


# ========== 고정점 ==========
def test_fixed_points_of_conjugation_by_five_cycle(a5):
    five_cycle = next(x for x in range(a5.order) if a5.elt_order[x] == 5)
    conjugation = Homomorphism(a5, a5, conjugation_images(a5, five_cycle))
    points = fixed_points(identity_map(a5), conjugation)
    assert len(points) == 5
    assert np.array_equal(points, centralizer(a5, five_cycle).members)


def test_fixed_points_of_inner_automorphisms(small_groups):
    Q8 = small_groups["Q8"]
    identity = identity_map(Q8)
    assert len(fixed_points(identity, identity)) == 8
    for x in range(Q8.order):
        points = fixed_points(identity, Homomorphism(Q8, Q8, conjugation_images(Q8, x)))
        assert 0 in points
        assert np.isin(center(Q8).members, points).all()


def test_fixed_points_need_shared_groups(small_groups):
    with pytest.raises(PreconditionError):
        fixed_points(identity_map(small_groups["C4"]), identity_map(small_groups["V4"]))
