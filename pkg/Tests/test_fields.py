"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Finite Field Tests
"""

# Libraries
import pytest

from Catalog.fields import GaloisField, galois_field, prime_power
from Utilities.error_tools import *


@pytest.mark.parametrize("q", [4, 7, 8, 9, 11, 25, 27, 49])
def test_field_axioms(q):
    assert galois_field(q).check_axioms()


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(11) == (11, 1)
    with pytest.raises(PreconditionError):
        prime_power(12)
    with pytest.raises(PreconditionError):
        GaloisField(16)


def test_gf9_arithmetic():
    F = galois_field(9)
    x = F.element(3)
    assert x.coefficients == (0, 1)
    # x^2 + 2x + 2 = 0 이므로 x^2 = x + 1
    assert (x * x).coefficients == (1, 1)
    assert x / x == F.one
    assert -x + x == F.zero
    assert x ** 8 == F.one
    assert x * x.inverse() == F.one


def test_primitive_element_generates_units():
    for q in (4, 8, 9, 11):
        F = galois_field(q)
        g = F.element(F.primitive)
        powers = {(g ** k).code for k in range(q - 1)}
        assert powers == set(range(1, q))


def test_zero_has_no_inverse():
    with pytest.raises(PreconditionError):
        galois_field(7).inverse(0)
