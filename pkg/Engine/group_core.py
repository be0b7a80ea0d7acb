"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Group Core Part
"""

# Libraries
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations
from math import factorial, gcd, lcm
from typing import Callable, Hashable, Iterator, Literal, Sequence

import hashlib
import re

import numpy as np

from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_Core")

IDENTITY: int = 0
Region = Literal["all", "inside", "outside"]

_CYCLE = re.compile(r"\(([^()]*)\)")


def _as_index_array(values) -> np.ndarray:
    return np.asarray(values, dtype=np.int64)


# ========== 순열 ==========
@dataclass(frozen=True)
class Perm:
    """
    {0..d-1} 위의 순열, images[i] 가 i 의 상
    곱은 함수 합성 규칙 (p * q)(i) = p(q(i)) 을 따름
    """
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise TableError("permutation images are not a bijection", images=self.images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Perm:
        """
        0-based 순환 표기 문자열을 순열로 바꾸는 기능
        :param text: "(0 1 2 3 4)(5 6)" 형식, "()" 는 항등원
        :param degree: 순열의 차수
        :return: Perm
        """
        leftover = _CYCLE.sub("", text).strip()
        if leftover:
            raise GroupParseError(f"unexpected text {leftover!r} in cycle notation")

        images = list(range(degree))
        seen: set[int] = set()
        for body in _CYCLE.findall(text):
            try:
                points = [int(token) for token in body.replace(",", " ").split()]
            except ValueError:
                raise GroupParseError(f"non-integer point in cycle ({body})")

            for point in points:
                if point < 0 or point >= degree:
                    raise GroupParseError(f"point {point} outside 0..{degree - 1}")
                if point in seen:
                    raise GroupParseError(f"point {point} repeated in cycle notation")
                seen.add(point)

            for source, target in zip(points, points[1:] + points[:1]):
                images[source] = target

        return cls(tuple(images))

    def __mul__(self, other: Perm) -> Perm:
        return Perm(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Perm:
        result = [0] * self.degree
        for point, image in enumerate(self.images):
            result[image] = point
        return Perm(tuple(result))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            result.append(tuple(cycle))
        return result

    @property
    def order(self) -> int:
        return reduce(lcm, (len(cycle) for cycle in self.cycles()), 1)

    def is_fixed_point_free(self) -> bool:
        return all(image != point for point, image in enumerate(self.images))

    def __str__(self) -> str:
        moved = [cycle for cycle in self.cycles() if len(cycle) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(point) for point in cycle) + ")" for cycle in moved)


@dataclass(frozen=True, eq=False)
class PermRepresentation:
    degree: int
    images: np.ndarray  # (군의 위수, degree) 배열, 행 x 가 원소 x 의 순열

    def perm(self, element: int) -> Perm:
        return Perm(tuple(int(value) for value in self.images[element]))


# ========== 곱셈표 검증 ==========
def _check_latin(table: np.ndarray) -> None:
    n = table.shape[0]
    ordered = np.arange(n)

    if table.min() < 0 or table.max() >= n:
        raise TableError("table entries fall outside 0..n-1", order=n)
    if not (np.array_equal(table[0], ordered) and np.array_equal(table[:, 0], ordered)):
        raise TableError("index 0 is not the identity row/column", order=n)
    if not np.array_equal(np.sort(table, axis=1), np.broadcast_to(ordered, table.shape)):
        raise TableError("a table row is not a permutation", order=n)
    if not np.array_equal(np.sort(table, axis=0), np.broadcast_to(ordered[:, None], table.shape)):
        raise TableError("a table column is not a permutation", order=n)


def _check_associative(table: np.ndarray, generators: Sequence[int]) -> None:
    # Light 검사: 생성원 s 에 대해 (x s) z = x (s z) 이면 전체가 결합적
    for s in generators:
        left = table[table[:, s]]
        right = table[:, table[s]]
        if not np.array_equal(left, right):
            raise TableError("multiplication is not associative", generator=s)


def _inverses(table: np.ndarray) -> np.ndarray:
    inverse = np.argmax(table == IDENTITY, axis=1).astype(np.int64)
    if not np.all(table[inverse, np.arange(table.shape[0])] == IDENTITY):
        raise TableError("left and right inverses disagree")
    return inverse


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    ordered = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    power = ordered.copy()
    exponent = 1
    while True:
        hit = (power == IDENTITY) & (orders == 0)
        orders[hit] = exponent
        if orders.all():
            return orders
        power = table[power, ordered]
        exponent += 1
        if exponent > n:
            raise TableError("element orders are undefined (not a group)")


def _closure_mask(table: np.ndarray, seeds) -> np.ndarray:
    mask = np.zeros(table.shape[0], dtype=bool)
    mask[IDENTITY] = True
    seeds = np.unique(_as_index_array(seeds))
    if seeds.size == 0:
        return mask

    frontier = np.array([IDENTITY])
    while frontier.size:
        found = table[np.ix_(frontier, seeds)].ravel()
        found = np.unique(found[~mask[found]])
        mask[found] = True
        frontier = found
    return mask


def _word_tree(table: np.ndarray, generators: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray, tuple[np.ndarray, ...]]:
    """
    생성원에 대한 BFS spanning tree: x = parent[x] * generators[gen_of[x]]
    layers 는 깊이 1 부터의 원소 묶음 (한 층 단위로 상을 계산할 수 있음)
    """
    n = table.shape[0]
    parent = np.full(n, -1, dtype=np.int64)
    gen_of = np.full(n, -1, dtype=np.int64)
    seen = np.zeros(n, dtype=bool)
    seen[IDENTITY] = True
    layers: list[np.ndarray] = []

    k = len(generators)
    if k:
        gens = np.array(generators, dtype=np.int64)
        frontier = np.array([IDENTITY])
        while frontier.size:
            found = table[np.ix_(frontier, gens)].ravel().astype(np.int64)
            source = np.repeat(frontier, k)
            via = np.tile(np.arange(k), frontier.size)

            fresh = ~seen[found]
            found, source, via = found[fresh], source[fresh], via[fresh]
            layer, first = np.unique(found, return_index=True)

            parent[layer] = source[first]
            gen_of[layer] = via[first]
            seen[layer] = True
            if layer.size:
                layers.append(layer)
            frontier = layer

    if not seen.all():
        raise TableError("generators do not generate the group", generators=generators)

    return parent, gen_of, tuple(layers)


def _find_generating_pair(table: np.ndarray, ranked: np.ndarray, attempts: int = 4096) -> tuple[int, int] | None:
    for x in ranked[:6]:
        for y in ranked:
            if y == x:
                continue
            attempts -= 1
            if attempts < 0:
                return None
            if _closure_mask(table, [x, y]).all():
                return int(x), int(y)
    return None


def _choose_generators(table: np.ndarray, orders: np.ndarray) -> tuple[int, ...]:
    n = table.shape[0]
    if n == 1:
        return ()

    # 높은 차수의 원소부터 탐욕적으로 선택한 뒤, 가능하면 2개짜리 생성계로 줄임
    ranked = np.argsort(-orders, kind="stable")
    chosen: list[int] = []
    mask = _closure_mask(table, chosen)
    for x in ranked:
        if mask[x]:
            continue
        chosen.append(int(x))
        mask = _closure_mask(table, chosen)
        if mask.all():
            break

    if len(chosen) > 2:
        pair = _find_generating_pair(table, ranked)
        if pair is not None:
            return pair

    return tuple(chosen)


# ========== 유한군 ==========
class FiniteGroup:
    """
    원소를 0..n-1 의 index 로 다루는 곱셈표 기반 유한군
    항등원은 항상 index 0, 생성원에 대한 단어 분해표(word tree)를 함께 저장함
    """

    def __init__(self, mul, generators: Sequence[int] | None = None, name: str = "",
                 perm_rep: PermRepresentation | None = None, check: bool = True):
        table = np.array(mul, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise TableError("multiplication table must be a non-empty square", shape=table.shape)

        n = table.shape[0]
        cap = load_settings().max_table
        if n > cap:
            raise CapExceededError(f"group order {n} exceeds the table cap {cap}", order=n, cap=cap)

        if check:
            _check_latin(table)
        table.setflags(write=False)

        self.mul: np.ndarray = table
        self.order: int = n
        self.name: str = name or f"G{n}"
        self.perm_rep = perm_rep
        self.factor_orders: tuple[int, int] | None = None
        self.cache: dict = {}

        self.inv: np.ndarray = _inverses(table)
        self.elt_order: np.ndarray = _element_orders(table)

        if generators is None:
            chosen = _choose_generators(table, self.elt_order)
        else:
            chosen = tuple(dict.fromkeys(int(g) for g in generators if int(g) != IDENTITY))
        self.generators: tuple[int, ...] = chosen

        self.parent, self.gen_of, self.layers = _word_tree(table, self.generators)

        if check:
            _check_associative(table, self.generators)

    def __repr__(self) -> str:
        return f"<FiniteGroup(name='{self.name}', order={self.order}, generators={self.generators})>"

    def __len__(self) -> int:
        return self.order

    # ----- 기본 연산 -----
    def multiply(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def power(self, x: int, exponent: int) -> int:
        result = IDENTITY
        base = x if exponent >= 0 else int(self.inv[x])
        for _ in range(abs(exponent)):
            result = int(self.mul[result, base])
        return result

    def conjugate(self, g: int, x: int) -> int:
        # g x g^-1
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def word(self, x: int) -> list[int]:
        """
        원소 x 를 생성원 index 들의 곱으로 분해한 단어
        """
        letters: list[int] = []
        while x != IDENTITY:
            letters.append(int(self.gen_of[x]))
            x = int(self.parent[x])
        return letters[::-1]

    # ----- 캐시되는 불변량 -----
    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(self.mul.tobytes()).hexdigest()

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def _class_data(self) -> tuple[tuple[np.ndarray, ...], np.ndarray]:
        class_of = np.full(self.order, -1, dtype=np.int64)
        classes: list[np.ndarray] = []
        for x in range(self.order):
            if class_of[x] >= 0:
                continue
            orbit = np.unique(self.mul[self.mul[:, x], self.inv]).astype(np.int64)
            class_of[orbit] = len(classes)
            classes.append(orbit)
        return tuple(classes), class_of

    @property
    def conjugacy_classes(self) -> tuple[np.ndarray, ...]:
        return self._class_data[0]

    @property
    def class_of(self) -> np.ndarray:
        return self._class_data[1]

    @cached_property
    def class_size(self) -> np.ndarray:
        sizes = np.array([len(c) for c in self.conjugacy_classes], dtype=np.int64)
        return sizes[self.class_of]

    @cached_property
    def relation_probes(self) -> tuple[tuple[tuple[tuple[int, int], ...], int], ...]:
        """
        생성원 쌍으로 만든 짧은 단어들과 그 위수
        준동형 후보의 상은 이 위수를 나누는 위수를 가져야 함
        """
        probes: list[tuple[tuple[tuple[int, int], ...], int]] = []
        for a, b in combinations(range(len(self.generators)), 2):
            words = (
                ((a, 1), (b, 1)),
                ((a, 1), (b, -1)),
                ((a, 1), (a, 1), (b, 1)),
                ((a, 1), (b, 1), (b, 1)),
                ((a, 1), (b, 1), (a, -1), (b, -1)),
            )
            for word in words:
                probes.append((word, int(self.elt_order[self.evaluate(word)])))
        return tuple(probes)

    def evaluate(self, word: Sequence[tuple[int, int]]) -> int:
        value = IDENTITY
        for letter, exponent in word:
            g = self.generators[letter]
            value = int(self.mul[value, g if exponent == 1 else self.inv[g]])
        return value

    def order_statistics(self, members: np.ndarray | None = None) -> dict[int, int]:
        orders = self.elt_order if members is None else self.elt_order[members]
        values, counts = np.unique(orders, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}


# ========== 부분군 ==========
class Subgroup:
    """
    parent 군의 부분군, members 는 정렬된 index 배열
    """

    def __init__(self, parent: FiniteGroup, members, check: bool = False):
        values = np.unique(_as_index_array(members))
        values.setflags(write=False)
        self.parent = parent
        self.members: np.ndarray = values

        if check and not self.is_closed():
            raise PreconditionError("element set is not a subgroup", group=parent.name, size=len(values))

    def __repr__(self) -> str:
        return f"<Subgroup(parent='{self.parent.name}', order={self.order})>"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members.tobytes()))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[self.members] = True
        return mask

    def is_closed(self) -> bool:
        m = self.members
        if m.size == 0 or m[0] != IDENTITY:
            return False
        products = self.parent.mul[np.ix_(m, m)]
        return bool(self.mask[products].all() and self.mask[self.parent.inv[m]].all())

    def is_normal(self) -> bool:
        G = self.parent
        for g in G.generators:
            conjugates = G.mul[G.mul[g, self.members], G.inv[g]]
            if not self.mask[conjugates].all():
                return False
        return True

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def image(self, images: np.ndarray) -> np.ndarray:
        return np.unique(images[self.members])

    @cached_property
    def group(self) -> FiniteGroup:
        """
        부분군을 독립된 FiniteGroup 으로 재번호한 것 (i 번 원소 = members[i])
        """
        position = np.full(self.parent.order, -1, dtype=np.int64)
        position[self.members] = np.arange(self.order)
        table = position[self.parent.mul[np.ix_(self.members, self.members)]]
        return FiniteGroup(table, name=f"{self.parent.name}[{self.order}]", check=False)


@dataclass(frozen=True)
class NormalSubgroup:
    subgroup: Subgroup
    characteristic: bool | None


# ========== 생성 ==========
@dataclass(frozen=True)
class PermutationSource:
    degree: int
    generators: tuple[Perm, ...]
    name: str = ""


@dataclass(frozen=True)
class TableSource:
    rows: tuple[tuple[int, ...], ...]
    name: str = ""


def _compose(x: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x[i] for i in g)


def _close(generators: Sequence[Hashable], multiply: Callable, identity: Hashable,
           cap: int) -> tuple[list, np.ndarray, np.ndarray, np.ndarray]:
    """
    생성원에 대한 너비 우선 닫힘 (Dimino 방식)
    right[j][x] 는 x * generators[j] 의 index
    """
    elements: list = [identity]
    index: dict = {identity: 0}
    parent: list[int] = [-1]
    via: list[int] = [-1]
    right: list[list[int]] = [[] for _ in generators]

    position = 0
    while position < len(elements):
        x = elements[position]
        for j, g in enumerate(generators):
            y = multiply(x, g)
            target = index.get(y)
            if target is None:
                target = len(elements)
                if target >= cap:
                    raise CapExceededError(f"closure exceeds the size cap {cap}", cap=cap)
                index[y] = target
                elements.append(y)
                parent.append(position)
                via.append(j)
            right[j].append(target)
        position += 1

    return elements, np.array(right, dtype=np.int64).reshape(len(generators), -1), \
        np.array(parent, dtype=np.int64), np.array(via, dtype=np.int64)


def _table_from_closure(right: np.ndarray, parent: np.ndarray, via: np.ndarray) -> np.ndarray:
    # a * (p * g) = (a * p) * g 이므로 열 단위로 채움
    n = len(parent)
    table = np.empty((n, n), dtype=np.int64)
    table[:, 0] = np.arange(n)
    for y in range(1, n):
        table[:, y] = right[via[y]][table[:, parent[y]]]
    return table


def group_from_closure(generators: Sequence[Hashable], multiply: Callable, identity: Hashable,
                       name: str = "") -> tuple[FiniteGroup, list]:
    """
    임의의 해시 가능한 원소(행렬 등)와 곱셈 함수로부터 군을 만드는 기능
    :param generators: 생성원 목록
    :param multiply: 곱셈 함수 multiply(x, y)
    :param identity: 항등원
    :param name: 군 이름
    :return: (FiniteGroup, index 순서의 원소 목록)
    """
    settings = load_settings()
    unique = [g for g in dict.fromkeys(generators) if g != identity]
    # 닫힘 탐색은 HGS_MAX_CLOSURE 와 곱셈표 한도 중 작은 쪽에서 멈춤
    cap = min(settings.max_closure, settings.max_table + 1)
    elements, right, parent, via = _close(unique, multiply, identity, cap)
    if len(elements) > settings.max_table:
        raise CapExceededError(f"group order exceeds the table cap {settings.max_table}")

    table = _table_from_closure(right, parent, via)
    gens = [int(right[j][0]) for j in range(len(unique))]
    group = FiniteGroup(table, generators=gens, name=name, check=True)
    logger.info(f"Closed {name or 'group'}: order {group.order}")
    return group, elements


def group_from_permutations(generators: Sequence[Perm], name: str = "") -> FiniteGroup:
    """
    순열 생성원으로부터 군을 만드는 기능 (순열 표현을 함께 보존)
    :param generators: 같은 차수의 Perm 목록
    :param name: 군 이름
    :return: FiniteGroup
    """
    if not generators:
        raise PreconditionError("at least one generator is required")

    degree = generators[0].degree
    settings = load_settings()
    if degree > settings.max_perm_degree:
        raise CapExceededError(f"permutation degree {degree} exceeds {settings.max_perm_degree}", degree=degree)
    if any(g.degree != degree for g in generators):
        raise PreconditionError("generators have different degrees")

    group, elements = group_from_closure([g.images for g in generators], _compose,
                                         tuple(range(degree)), name=name)
    group.perm_rep = PermRepresentation(degree, np.array(elements, dtype=np.int64).reshape(-1, degree))
    return group


def group_from_table(rows: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    return FiniteGroup(np.array(rows, dtype=np.int64), name=name, check=True)


def construct_group(source: PermutationSource | TableSource) -> FiniteGroup:
    """
    군 원천(순열 생성원 또는 곱셈표)으로부터 검증된 군을 만드는 기능
    :param source: PermutationSource 또는 TableSource
    :return: FiniteGroup
    """
    if isinstance(source, PermutationSource):
        if any(g.degree != source.degree for g in source.generators):
            raise PreconditionError("generator degree does not match the declared degree", degree=source.degree)
        if not source.generators:
            return group_from_table([[0]], name=source.name or "1")
        return group_from_permutations(list(source.generators), name=source.name)

    if isinstance(source, TableSource):
        return group_from_table(source.rows, name=source.name)

    raise PreconditionError(f"unsupported group source {type(source).__name__}")


def cyclic_group(n: int) -> FiniteGroup:
    ordered = np.arange(n)
    table = (ordered[:, None] + ordered[None, :]) % n
    return FiniteGroup(table, generators=[1] if n > 1 else [], name=f"C{n}", check=False)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], name="1", check=False)


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str = "") -> FiniteGroup:
    """
    A x B 의 곱셈표, 원소 (a, b) 의 index 는 a * |B| + b
    """
    nA, nB = A.order, B.order
    ordered = np.arange(nA * nB)
    a, b = ordered // nB, ordered % nB
    table = A.mul[a[:, None], a[None, :]].astype(np.int64) * nB + B.mul[b[:, None], b[None, :]]

    # 생성원을 짝지어 보고 부족하면 전부 사용
    paired = [ga * nB + gb for ga, gb in zip(A.generators, B.generators)]
    rest = [ga * nB for ga in A.generators[len(B.generators):]] + list(B.generators[len(A.generators):])
    generators = paired + rest
    if not _closure_mask(table, generators).all():
        generators = [ga * nB for ga in A.generators] + list(B.generators)
        if len(generators) > 2:
            orders = _element_orders(table)
            pair = _find_generating_pair(table, np.argsort(-orders, kind="stable"))
            if pair is not None:
                generators = list(pair)

    product = FiniteGroup(table, generators=generators, name=name or f"{A.name}x{B.name}", check=False)
    product.factor_orders = (nA, nB)
    return product


def product_factors(P: FiniteGroup) -> tuple[Subgroup, Subgroup]:
    if P.factor_orders is None:
        raise PreconditionError("group was not built as a direct product", group=P.name)
    nA, nB = P.factor_orders
    return Subgroup(P, np.arange(nA) * nB), Subgroup(P, np.arange(nB))


def quotient_group(G: FiniteGroup, K: Subgroup) -> tuple[FiniteGroup, np.ndarray]:
    """
    정규부분군 K 에 대한 몫군 G/K
    :return: (몫군, 각 원소의 잉여류 index 배열)
    """
    if K.parent is not G or not K.is_normal():
        raise PreconditionError("quotient requires a normal subgroup", group=G.name)

    representative = G.mul[:, K.members].min(axis=1)
    labels = np.unique(representative)
    projection = np.searchsorted(labels, representative).astype(np.int64)
    table = projection[G.mul[np.ix_(labels, labels)]]
    quotient = FiniteGroup(table, name=f"{G.name}/{K.order}", check=False)
    return quotient, projection


# ========== 원소/부분군 질의 ==========
def order_census(G: FiniteGroup, k: int, region: Region = "all", subgroup: Subgroup | None = None) -> int:
    """
    위수가 정확히 k 인 원소의 개수
    :param G: 군
    :param k: 위수
    :param region: all | inside | outside (subgroup 기준)
    :param subgroup: region 이 all 이 아닐 때의 기준 부분군 A
    :return: 개수 int
    """
    hits = G.elt_order == k
    if region == "all":
        return int(hits.sum())

    if subgroup is None or subgroup.parent is not G:
        raise PreconditionError("region census needs a subgroup of the same group", group=G.name)
    inside = subgroup.mask
    return int((hits & (inside if region == "inside" else ~inside)).sum())


def center(G: FiniteGroup) -> Subgroup:
    if "center" not in G.cache:
        G.cache["center"] = Subgroup(G, np.flatnonzero((G.mul == G.mul.T).all(axis=1)))
    return G.cache["center"]


def centralizer(G: FiniteGroup, x: int) -> Subgroup:
    return Subgroup(G, np.flatnonzero(G.mul[x] == G.mul[:, x]))


def subgroup_closure(G: FiniteGroup, seed) -> Subgroup:
    return Subgroup(G, np.flatnonzero(_closure_mask(G.mul, seed)))


def commutator_subgroup(G: FiniteGroup, members: np.ndarray | None = None) -> Subgroup:
    """
    members 로 이루어진 부분군(기본값: G 전체)의 교환자 부분군
    """
    X = np.arange(G.order) if members is None else _as_index_array(members)
    xy = G.mul[X[:, None], X[None, :]]
    commutators = G.mul[G.mul[xy, G.inv[X][:, None]], G.inv[X][None, :]]
    return subgroup_closure(G, np.unique(commutators))


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    if "derived" not in G.cache:
        G.cache["derived"] = commutator_subgroup(G)
    return G.cache["derived"]


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [Subgroup(G, np.arange(G.order))]
    while True:
        following = commutator_subgroup(G, series[-1].members)
        if following.order == series[-1].order:
            return series
        series.append(following)


def is_perfect(G: FiniteGroup) -> bool:
    return derived_subgroup(G).order == G.order


def is_solvable(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def perfect_core(G: FiniteGroup) -> Subgroup:
    # 유도열이 멈춘 항: 모든 완전 부분군을 포함함
    return derived_series(G)[-1]


def normal_subgroups(G: FiniteGroup, characteristic: bool = True, aut=None) -> list[NormalSubgroup]:
    """
    켤레류 합집합의 닫힘으로 모든 정규부분군을 구하는 기능
    :param G: 군
    :param characteristic: True 이면 Aut(G) 로 특성 부분군 여부 표시
    :param aut: 미리 계산한 AutomorphismGroup (없으면 계산)
    :return: 위수 순으로 정렬된 NormalSubgroup list
    """
    cap = load_settings().max_table
    if G.order > cap:
        raise CapExceededError(f"normal subgroup scan is capped at order {cap}", order=G.order)

    if "normal" not in G.cache:
        found: dict[bytes, np.ndarray] = {}
        trivial = np.array([IDENTITY], dtype=np.int64)
        found[trivial.tobytes()] = trivial
        for cls in G.conjugacy_classes[1:]:
            members = np.flatnonzero(_closure_mask(G.mul, cls)).astype(np.int64)
            found.setdefault(members.tobytes(), members)

        # 정규부분군 둘의 곱은 다시 정규부분군
        changed = True
        while changed:
            changed = False
            current = list(found.values())
            for i, first in enumerate(current):
                for second in current[i + 1:]:
                    joined = np.unique(G.mul[np.ix_(first, second)]).astype(np.int64)
                    key = joined.tobytes()
                    if key not in found:
                        found[key] = joined
                        changed = True

        ordered = sorted(found.values(), key=lambda m: (len(m), tuple(m)))
        G.cache["normal"] = [Subgroup(G, members) for members in ordered]

    subgroups: list[Subgroup] = G.cache["normal"]
    if not characteristic:
        return [NormalSubgroup(N, None) for N in subgroups]

    if aut is None:
        from Engine.morphisms import automorphism_group
        aut = automorphism_group(G)

    result: list[NormalSubgroup] = []
    for N in subgroups:
        stable = all(np.array_equal(np.unique(aut.action[a][N.members]), N.members)
                     for a in aut.carrier.generators)
        result.append(NormalSubgroup(N, stable))
    return result


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    nontrivial = [entry.subgroup for entry in normal_subgroups(G, characteristic=False)
                  if not entry.subgroup.is_trivial()]
    return [N for N in nontrivial
            if not any(M.order < N.order and N.mask[M.members].all() for M in nontrivial)]


# ========== 준동형 후보 탐색 ==========
def extend_images(S: FiniteGroup, T: FiniteGroup, gen_images: np.ndarray) -> np.ndarray:
    """
    생성원의 상 (B, k) 로부터 word tree 를 따라 전체 상 (B, |S|) 을 층 단위로 계산
    """
    images = np.zeros((gen_images.shape[0], S.order), dtype=np.int64)
    for layer in S.layers:
        images[:, layer] = T.mul[images[:, S.parent[layer]], gen_images[:, S.gen_of[layer]]]
    return images


def respects_generators(S: FiniteGroup, T: FiniteGroup, images: np.ndarray, gen_images: np.ndarray) -> np.ndarray:
    # 모든 x 와 생성원 s 에 대해 phi(x s) = phi(x) phi(s) 이면 준동형
    ok = np.ones(images.shape[0], dtype=bool)
    for j, s in enumerate(S.generators):
        lhs = images[:, S.mul[:, s]]
        rhs = T.mul[images, gen_images[:, j:j + 1]]
        ok &= (lhs == rhs).all(axis=1)
    return ok


def is_homomorphism_table(S: FiniteGroup, T: FiniteGroup, images: np.ndarray) -> bool:
    # 모든 쌍에 대한 전수 검사
    return bool(np.array_equal(T.mul[images[:, None], images[None, :]], images[S.mul]))


def _probe_mask(T: FiniteGroup, probes, batch: np.ndarray) -> np.ndarray:
    mask = np.ones(batch.shape[0], dtype=bool)
    for word, bound in probes:
        value = np.zeros(batch.shape[0], dtype=np.int64)
        for letter, exponent in word:
            step = batch[:, letter] if exponent == 1 else T.inv[batch[:, letter]]
            value = T.mul[value, step]
        mask &= (bound % T.elt_order[value]) == 0
    return mask


def search_generator_images(S: FiniteGroup, T: FiniteGroup, candidates: Sequence[np.ndarray],
                            injective: bool = False, sequence: Sequence[int] | None = None) -> Iterator[np.ndarray]:
    """
    생성원 상의 후보로부터 모든 준동형 S -> T 를 결정적인 순서로 내보내는 기능
    후보가 적은 생성원부터 배정하고 (fail-first), 마지막 생성원은 묶음으로 검사함
    :param S: 정의역 (생성원과 word tree 필요)
    :param T: 공역
    :param candidates: 생성원마다 허용되는 상의 index 배열
    :param injective: True 이면 단사만
    :param sequence: 배정 순서 (없으면 후보 수 오름차순)
    :return: 상 배열 (|S|,) 의 iterator
    """
    k = len(S.generators)
    if k == 0:
        yield np.zeros(1, dtype=np.int64)
        return

    if sequence is None:
        sequence = sorted(range(k), key=lambda j: (len(candidates[j]), j))
    position = {j: level for level, j in enumerate(sequence)}

    # 단어에 쓰인 생성원이 모두 배정되는 단계에서 검사
    probes_at: list[list] = [[] for _ in range(k)]
    for word, bound in S.relation_probes:
        level = max(position[letter] for letter, _ in word)
        probes_at[level].append((word, bound))

    assigned = np.zeros(k, dtype=np.int64)
    lists = [_as_index_array(c) for c in candidates]

    def descend(level: int) -> Iterator[np.ndarray]:
        j = sequence[level]
        if level == k - 1:
            batch = np.repeat(assigned[None, :], len(lists[j]), axis=0)
            batch[:, j] = lists[j]
            batch = batch[_probe_mask(T, probes_at[level], batch)]
            if batch.shape[0] == 0:
                return
            images = extend_images(S, T, batch)
            ok = respects_generators(S, T, images, batch)
            if injective:
                ok &= (images == IDENTITY).sum(axis=1) == 1
            for row in np.flatnonzero(ok):
                yield images[row]
            return

        for value in lists[j]:
            assigned[j] = value
            if probes_at[level] and not _probe_mask(T, probes_at[level], assigned[None, :])[0]:
                continue
            yield from descend(level + 1)

    yield from descend(0)


# ========== 동형 판정 ==========
def fingerprint(G: FiniteGroup) -> tuple:
    """
    동형 불변량: 위수, 원소 위수 분포, 중심의 크기, 아벨화의 크기, 켤레류 분포
    """
    if "fingerprint" not in G.cache:
        profile = Counter((len(c), int(G.elt_order[c[0]])) for c in G.conjugacy_classes)
        G.cache["fingerprint"] = (
            G.order,
            tuple(sorted(G.order_statistics().items())),
            center(G).order,
            G.order // derived_subgroup(G).order,
            tuple(sorted(profile.items())),
        )
    return G.cache["fingerprint"]


def matching_candidates(G: FiniteGroup, H: FiniteGroup, x: int) -> np.ndarray:
    # 위수와 켤레류 크기가 같은 원소만 동형사상의 상이 될 수 있음
    return np.flatnonzero((H.elt_order == G.elt_order[x]) & (H.class_size == G.class_size[x]))


def are_isomorphic(G: FiniteGroup, H: FiniteGroup):
    """
    두 군이 동형인지 판정하고 동형사상을 돌려주는 기능
    :param G: 첫 번째 군
    :param H: 두 번째 군
    :return: Homomorphism (동형사상) 또는 None
    """
    from Engine.morphisms import Homomorphism

    if G.order != H.order or fingerprint(G) != fingerprint(H):
        return None

    candidates = [matching_candidates(G, H, s) for s in G.generators]
    for images in search_generator_images(G, H, candidates, injective=True):
        isomorphism = Homomorphism(G, H, images)
        if not isomorphism.verify():
            logger.error(f"Isomorphism candidate failed the pair check: {G.name} -> {H.name}")
            raise EngineInvariantError("isomorphism candidate failed the full pair check",
                                       source=G.name, target=H.name)
        return isomorphism
    return None


# ========== 대칭군의 순환형 census ==========
def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def symmetric_order_census(n: int, k: int, parity: Literal["all", "even", "odd"] = "all") -> int:
    """
    S_n 에서 위수 k 인 원소의 개수를 순환형(분할)별 켤레류 크기로 세는 기능
    :param n: 차수
    :param k: 위수
    :param parity: all | even (A_n 안) | odd (S_n - A_n)
    :return: 개수 int
    """
    total = 0
    for shape in _partitions(n):
        if reduce(lcm, shape, 1) != k:
            continue
        even = (n - len(shape)) % 2 == 0
        if (parity == "even" and not even) or (parity == "odd" and even):
            continue
        centralizer_order = 1
        for length, multiplicity in Counter(shape).items():
            centralizer_order *= factorial(multiplicity) * length ** multiplicity
        total += factorial(n) // centralizer_order
    return total


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    return all(value % d for d in range(2, int(value ** 0.5) + 1))


__all__ = [
    "IDENTITY", "Perm", "PermRepresentation", "FiniteGroup", "Subgroup", "NormalSubgroup",
    "PermutationSource", "TableSource", "construct_group", "group_from_closure",
    "group_from_permutations", "group_from_table", "cyclic_group", "trivial_group",
    "direct_product", "product_factors", "quotient_group", "order_census", "center",
    "centralizer", "subgroup_closure", "commutator_subgroup", "derived_subgroup",
    "derived_series", "is_perfect", "is_solvable", "perfect_core", "normal_subgroups",
    "minimal_normal_subgroups", "extend_images", "respects_generators",
    "is_homomorphism_table", "search_generator_images", "fingerprint",
    "matching_candidates", "are_isomorphic", "symmetric_order_census", "is_prime", "gcd",
]
