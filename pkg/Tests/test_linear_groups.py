"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Linear Group Tests
"""

# Libraries
import pytest

from Catalog.fields import galois_field
from Catalog.linear_groups import (determinant, matrix_group, matrix_multiply, projective_general_linear_group,
                                   projective_permutation, projective_special_linear_group, quaternion_group,
                                   special_linear_group)
from Engine.group_core import center
from Utilities.error_tools import *


def test_matrix_arithmetic():
    F = galois_field(5)
    x, y = (1, 2, 3, 4), (0, 1, 1, 0)
    assert matrix_multiply(F, x, y) == (2, 1, 4, 3)
    assert determinant(F, x) == 3


@pytest.mark.parametrize("q, order", [(2, 6), (3, 24), (4, 60), (5, 120)])
def test_special_linear_orders(q, order):
    assert special_linear_group(q).order == order


def test_sl25_has_central_involution():
    SL = special_linear_group(5)
    assert center(SL).order == 2


@pytest.mark.parametrize("q, order", [(4, 60), (5, 60), (7, 168), (9, 360)])
def test_projective_special_orders(q, order):
    G = projective_special_linear_group(q)
    assert G.order == order
    assert G.perm_rep.degree == q + 1


def test_projective_general_orders():
    G = projective_general_linear_group(9)
    assert G.order == 720
    assert G.perm_rep.degree == 10


def test_projective_permutation_of_identity():
    F = galois_field(7)
    assert projective_permutation(F, (1, 0, 0, 1)).images == tuple(range(8))
    # x -> x + 1 은 무한원점(index 7)을 고정
    assert projective_permutation(F, (1, 1, 0, 1)).images[7] == 7


def test_quaternion_group():
    Q8 = quaternion_group()
    assert Q8.order_statistics() == {1: 1, 2: 1, 4: 6}


def test_linear_group_limits():
    with pytest.raises(PreconditionError):
        special_linear_group(13)
    with pytest.raises(PreconditionError):
        matrix_group(5, [(1, 1, 1, 1)], name="singular")
