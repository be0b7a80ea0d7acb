"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Finite Field Part
"""

# Libraries
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

import numpy as np

from Engine.group_core import is_prime
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_Catalog")

# 확장체의 고정 기약다항식 (낮은 차수부터의 계수, 최고차 계수 1 은 생략)
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0),     # x^3 + x + 1
    (3, 2): (2, 2),        # x^2 + 2x + 2
    (3, 3): (1, 2, 0),     # x^3 + 2x + 1
    (5, 2): (2, 1),        # x^2 + x + 2
    (7, 2): (3, 1),        # x^2 + x + 3
}


def prime_power(q: int) -> tuple[int, int]:
    """
    q = p^k 분해, 소수의 거듭제곱이 아니면 PreconditionError
    """
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                break
            k, rest = 0, q
            while rest % p == 0:
                rest //= p
                k += 1
            if rest == 1:
                return p, k
            break
    raise PreconditionError(f"{q} is not a prime power", q=q)


# ========== GF(q) ==========
class GaloisField:
    """
    원소 a_0 + a_1 x + ... 를 정수 code sum(a_i p^i) 로 다루는 유한체
    덧셈표와 곱셈표를 numpy 배열로 미리 만들어 둠
    """

    def __init__(self, q: int):
        p, k = prime_power(q)
        if k > 3 or q > 81:
            raise PreconditionError("fields are limited to extension degree 3 and order 81", q=q)
        if k > 1 and (p, k) not in MODULI:
            raise PreconditionError(f"no fixed modulus for GF({q})", q=q)

        self.q, self.p, self.k = q, p, k
        self.modulus: tuple[int, ...] = MODULI.get((p, k), (0,))

        digits = np.array([[(c // p ** i) % p for i in range(k)] for c in range(q)], dtype=np.int64)
        weights = p ** np.arange(k)
        self.digits = digits
        self.add_table: np.ndarray = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.mul_table: np.ndarray = np.array([[self._encode(self._poly_mul(digits[a], digits[b]))
                                                for b in range(q)] for a in range(q)], dtype=np.int64)
        self.neg_table: np.ndarray = ((-digits) % p) @ weights

        self.inv_table = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv_table[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])

        self.primitive: int = self._find_primitive()
        logger.debug(f"Built GF({q}) with modulus {self.modulus}")

    def __repr__(self) -> str:
        return f"<GaloisField(q={self.q})>"

    def _poly_mul(self, a: np.ndarray, b: np.ndarray) -> list[int]:
        p, k = self.p, self.k
        product = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                product[i + j] = (product[i + j] + int(x) * int(y)) % p
        # x^k = -(m_0 + m_1 x + ...) 로 높은 차수부터 줄임
        for degree in range(2 * k - 2, k - 1, -1):
            coefficient = product[degree]
            if coefficient:
                product[degree] = 0
                for i, m in enumerate(self.modulus):
                    product[degree - k + i] = (product[degree - k + i] - coefficient * m) % p
        return product[:k]

    def _encode(self, coefficients) -> int:
        return int(sum(int(c) * self.p ** i for i, c in enumerate(coefficients)))

    def _find_primitive(self) -> int:
        for candidate in range(1, self.q):
            power, seen = 1, 0
            while True:
                power = int(self.mul_table[power, candidate])
                seen += 1
                if power == 1:
                    break
            if seen == self.q - 1:
                return candidate
        raise EngineInvariantError("multiplicative group is not cyclic", q=self.q)

    # ----- 원소 -----
    def element(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise PreconditionError(f"{code} is not an element code of GF({self.q})")
        return FieldElement(self, code)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def additive_basis(self) -> list[int]:
        # 1, x, x^2 ... 의 code
        return [self.p ** i for i in range(self.k)]

    # ----- code 연산 -----
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inverse(self, a: int) -> int:
        if a == 0:
            raise PreconditionError("zero has no multiplicative inverse", q=self.q)
        return int(self.inv_table[a])

    def check_axioms(self) -> bool:
        """
        체 공리를 모든 원소 조합에 대해 확인하는 기능
        :return: 모두 만족하면 True
        """
        add, mul = self.add_table, self.mul_table
        ordered = np.arange(self.q)
        a, b, c = ordered[:, None, None], ordered[None, :, None], ordered[None, None, :]
        checks = {
            "additive identity": np.array_equal(add[0], ordered),
            "multiplicative identity": np.array_equal(mul[1], ordered),
            "additive commutativity": np.array_equal(add, add.T),
            "multiplicative commutativity": np.array_equal(mul, mul.T),
            "additive associativity": np.array_equal(add[add[a, b], c], add[a, add[b, c]]),
            "multiplicative associativity": np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]),
            "distributivity": np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]]),
            "additive inverses": bool(np.all(add[ordered, self.neg_table] == 0)),
            "multiplicative inverses": bool(np.all(mul[ordered[1:], self.inv_table[1:]] == 1)),
        }
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            logger.error(f"GF({self.q}) fails field axioms: {failed}")
        return not failed


@cache
def galois_field(q: int) -> GaloisField:
    return GaloisField(q)


@dataclass(frozen=True)
class FieldElement:
    field: GaloisField
    code: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise PreconditionError("elements of different fields", q=self.field.q)
            return other.code
        return self.field.element(int(other) % self.field.p).code

    def __add__(self, other) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.code, self._other(other)))

    def __sub__(self, other) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.code, self._other(other)))

    def __mul__(self, other) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.code, self._other(other)))

    def __truediv__(self, other) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.code, self.field.inverse(self._other(other))))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, int(self.field.neg_table[self.code]))

    def __pow__(self, exponent: int) -> FieldElement:
        base = self if exponent >= 0 else FieldElement(self.field, self.field.inverse(self.code))
        result = self.field.one
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __bool__(self) -> bool:
        return self.code != 0

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inverse(self.code))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field.digits[self.code])

    def __repr__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}x^{i}" if c != 1 else f"x^{i}"
                 for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) or "0"


__all__ = ["MODULI", "prime_power", "GaloisField", "galois_field", "FieldElement"]
