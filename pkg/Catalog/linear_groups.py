"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Linear Group Part
"""

# Libraries
from __future__ import annotations

from Catalog.fields import GaloisField, galois_field
from Engine.group_core import FiniteGroup, Perm, group_from_closure, group_from_permutations
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_Catalog")

# 2x2 행렬은 (a, b, c, d) = [[a, b], [c, d]] 의 체 원소 code 튜플
Matrix = tuple[int, int, int, int]

MAX_Q = 11


def _field(q: int) -> GaloisField:
    if q > MAX_Q:
        raise PreconditionError(f"linear groups are limited to q <= {MAX_Q}", q=q)
    return galois_field(q)


def matrix_multiply(F: GaloisField, x: Matrix, y: Matrix) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (F.add(F.mul(a, e), F.mul(b, g)), F.add(F.mul(a, f), F.mul(b, h)),
            F.add(F.mul(c, e), F.mul(d, g)), F.add(F.mul(c, f), F.mul(d, h)))


def determinant(F: GaloisField, x: Matrix) -> int:
    a, b, c, d = x
    return F.sub(F.mul(a, d), F.mul(b, c))


def sl2_generators(F: GaloisField) -> list[Matrix]:
    """
    위/아래 삼각 unipotent 행렬 (덧셈 기저마다 하나씩), 이들이 SL(2, q) 를 생성함
    """
    upper = [(1, b, 0, 1) for b in F.additive_basis()]
    lower = [(1, 0, b, 1) for b in F.additive_basis()]
    return upper + lower


def pgl2_generators(F: GaloisField) -> list[Matrix]:
    # 행렬식이 원시원인 대각행렬을 더하면 GL(2, q) 의 상이 모두 얻어짐
    return sl2_generators(F) + [(F.primitive, 0, 0, 1)]


# ========== 행렬군 ==========
def special_linear_group(q: int) -> FiniteGroup:
    """
    SL(2, q) 를 행렬 곱셈의 닫힘으로 만드는 기능
    :param q: 체의 크기 (q <= 11)
    :return: FiniteGroup (위수 q(q-1)(q+1))
    """
    F = _field(q)
    group, _ = group_from_closure(sl2_generators(F), lambda x, y: matrix_multiply(F, x, y), (1, 0, 0, 1),
                                  name=f"SL(2,{q})")
    expected = q * (q - 1) * (q + 1)
    if group.order != expected:
        raise EngineInvariantError(f"SL(2,{q}) closed to order {group.order}", expected=expected)
    return group


def matrix_group(q: int, generators: list[Matrix], name: str) -> tuple[FiniteGroup, list[Matrix]]:
    F = _field(q)
    for x in generators:
        if determinant(F, x) == 0:
            raise PreconditionError("singular generator matrix", matrix=list(x))
    return group_from_closure(generators, lambda x, y: matrix_multiply(F, x, y), (1, 0, 0, 1), name=name)


# ========== 사영직선 위의 작용 ==========
def projective_points(F: GaloisField) -> list[tuple[int, int]]:
    # [x : 1] (x in GF(q)) 과 [1 : 0], index q 가 무한원점
    return [(x, 1) for x in range(F.q)] + [(1, 0)]


def _normalize(F: GaloisField, point: tuple[int, int]) -> tuple[int, int]:
    x, y = point
    if y == 0:
        return 1, 0
    return F.mul(x, F.inverse(y)), 1


def projective_permutation(F: GaloisField, x: Matrix) -> Perm:
    """
    행렬 [[a, b], [c, d]] 가 사영직선의 q+1 개 점에 작용하는 순열
    """
    a, b, c, d = x
    points = projective_points(F)
    position = {point: i for i, point in enumerate(points)}
    images = []
    for u, v in points:
        image = _normalize(F, (F.add(F.mul(a, u), F.mul(b, v)), F.add(F.mul(c, u), F.mul(d, v))))
        images.append(position[image])
    return Perm(tuple(images))


def projective_special_linear_group(q: int) -> FiniteGroup:
    F = _field(q)
    generators = [projective_permutation(F, x) for x in sl2_generators(F)]
    group = group_from_permutations(generators, name=f"PSL(2,{q})")
    expected = q * (q - 1) * (q + 1) // (1 if q % 2 == 0 else 2)
    if group.order != expected:
        raise EngineInvariantError(f"PSL(2,{q}) closed to order {group.order}", expected=expected)
    return group


def projective_general_linear_group(q: int) -> FiniteGroup:
    F = _field(q)
    generators = [projective_permutation(F, x) for x in pgl2_generators(F)]
    group = group_from_permutations(generators, name=f"PGL(2,{q})")
    expected = q * (q - 1) * (q + 1)
    if group.order != expected:
        raise EngineInvariantError(f"PGL(2,{q}) closed to order {group.order}", expected=expected)
    logger.info(f"Built PGL(2,{q}) on {q + 1} projective points")
    return group


def quaternion_group() -> FiniteGroup:
    """
    SL(2, 3) 안의 i = [[0, -1], [1, 0]], j = [[1, 1], [1, -1]] 로 생성되는 Q8
    """
    group, _ = matrix_group(3, [(0, 2, 1, 0), (1, 1, 1, 2)], name="Q8")
    return group


__all__ = [
    "Matrix", "MAX_Q", "matrix_multiply", "determinant", "sl2_generators", "pgl2_generators",
    "special_linear_group", "matrix_group", "projective_points", "projective_permutation",
    "projective_special_linear_group", "projective_general_linear_group", "quaternion_group",
]
