"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Morphisms Part
"""

# Libraries
from __future__ import annotations

from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from Engine.group_core import (IDENTITY, FiniteGroup, Subgroup, center, is_homomorphism_table,
                               matching_candidates, search_generator_images)
from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *
from Utilities.pool_tools import run_partitioned, split_evenly

logger = get_logger("HGS_Morphisms")


# ========== 준동형사상 ==========
class Homomorphism:
    """
    source -> target 준동형사상, images[x] 는 x 의 상
    """

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images):
        values = np.asarray(images, dtype=np.int64)
        if values.shape != (source.order,):
            raise PreconditionError("image array does not match the source order",
                                    source=source.name, size=values.shape)
        if values[IDENTITY] != IDENTITY:
            raise PreconditionError("identity must map to identity", source=source.name)
        values.setflags(write=False)

        self.source = source
        self.target = target
        self.images: np.ndarray = values

    def __repr__(self) -> str:
        return f"<Homomorphism({self.source.name} -> {self.target.name}, kernel={self.kernel.order})>"

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (self.source is other.source and self.target is other.target
                and np.array_equal(self.images, other.images))

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    @cached_property
    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.flatnonzero(self.images == IDENTITY))

    @cached_property
    def image(self) -> Subgroup:
        return Subgroup(self.target, np.unique(self.images))

    def is_injective(self) -> bool:
        return self.kernel.is_trivial()

    def is_surjective(self) -> bool:
        return self.image.is_whole()

    def compose(self, first: Homomorphism) -> Homomorphism:
        # self o first (first 를 먼저 적용)
        if first.target is not self.source:
            raise PreconditionError("homomorphisms are not composable",
                                    first=first.target.name, second=self.source.name)
        return Homomorphism(first.source, self.target, self.images[first.images])

    def verify(self) -> bool:
        return is_homomorphism_table(self.source, self.target, self.images)


def identity_map(G: FiniteGroup) -> Homomorphism:
    return Homomorphism(G, G, np.arange(G.order))


def conjugation_images(G: FiniteGroup, x: int) -> np.ndarray:
    # conj(x)(y) = x y x^-1
    return G.mul[G.mul[x], G.inv[x]].astype(np.int64)


def fixed_points(phi: Homomorphism, psi: Homomorphism) -> np.ndarray:
    """
    두 준동형사상이 일치하는 원소 집합
    :param phi: 첫 번째 준동형사상
    :param psi: 두 번째 준동형사상 (같은 source, target)
    :return: 정렬된 원소 index 배열 (항상 항등원 포함)
    """
    if phi.source is not psi.source or phi.target is not psi.target:
        raise PreconditionError("fixed points need a shared source and target",
                                phi=f"{phi.source.name}->{phi.target.name}",
                                psi=f"{psi.source.name}->{psi.target.name}")
    return np.flatnonzero(phi.images == psi.images)


# ========== 자기동형군 ==========
class AutomorphismGroup:
    """
    base 의 자기동형군
    carrier 는 합성을 곱으로 하는 군 (a * b = a o b), action[a] 는 a 가 base 에 작용하는 상 배열
    """

    def __init__(self, base: FiniteGroup, action: np.ndarray):
        self.base = base
        self.action: np.ndarray = action
        self.action.setflags(write=False)

        generators = np.array(base.generators, dtype=np.int64)
        k = len(generators)
        self._generators = generators

        # 자기동형사상은 생성원의 상으로 결정되므로 그 code 로 index 를 찾음
        codes = _image_codes(action[:, generators], base.order)
        self._sort = np.argsort(codes, kind="stable")
        self._sorted_codes = codes[self._sort]
        if np.any(np.diff(self._sorted_codes) == 0):
            raise EngineInvariantError("two automorphisms agree on the generators", group=base.name)

        m = len(action)
        # 합성 a o b 의 생성원 상: action[a][action[b][gens]]
        composite = action[np.arange(m)[:, None, None], action[:, generators][None, :, :]]
        table = self._lookup(_image_codes(composite.reshape(m * m, k), base.order)).reshape(m, m)
        self.carrier = FiniteGroup(table, name=f"Aut({base.name})", check=False)

        conjugates = base.mul[base.mul[:, generators], base.inv[:, None]]
        self.inner_map: np.ndarray = self._lookup(_image_codes(conjugates, base.order))
        self.inner = Subgroup(self.carrier, np.unique(self.inner_map))

    def __repr__(self) -> str:
        return f"<AutomorphismGroup(base='{self.base.name}', order={self.order}, inner={self.inner.order})>"

    @property
    def order(self) -> int:
        return self.carrier.order

    def _locate(self, codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        position = np.minimum(np.searchsorted(self._sorted_codes, codes), len(self._sorted_codes) - 1)
        return self._sort[position], self._sorted_codes[position] == codes

    def _lookup(self, codes: np.ndarray) -> np.ndarray:
        index, found = self._locate(codes)
        if not found.all():
            raise EngineInvariantError("automorphism set is not closed under composition", group=self.base.name)
        return index.astype(np.int64)

    def indices_of(self, images: np.ndarray) -> np.ndarray:
        """
        (B, |base|) 상 배열의 각 행이 자기동형사상이면 carrier index, 아니면 -1
        """
        images = np.asarray(images, dtype=np.int64).reshape(-1, self.base.order)
        index, found = self._locate(_image_codes(images[:, self._generators], self.base.order))
        found &= (self.action[index] == images).all(axis=1)
        return np.where(found, index, -1)

    def index_of(self, images: np.ndarray) -> int | None:
        index = int(self.indices_of(images)[0])
        return index if index >= 0 else None

    def automorphism(self, a: int) -> Homomorphism:
        return Homomorphism(self.base, self.base, self.action[a])

    def outer_order(self) -> int:
        return self.order // self.inner.order


def _image_codes(gen_images: np.ndarray, base_order: int) -> np.ndarray:
    gen_images = np.asarray(gen_images, dtype=np.int64)
    k = gen_images.shape[-1]
    if k and k * np.log2(max(base_order, 2)) >= 62:
        raise InfeasibleError("too many generators to encode automorphisms", generators=k, order=base_order)
    weights = base_order ** np.arange(k, dtype=np.int64)
    return (gen_images * weights).sum(axis=-1)


def automorphism_group(G: FiniteGroup) -> AutomorphismGroup:
    """
    생성원 상의 백트래킹으로 Aut(G) 전체를 구하는 기능
    후보는 위수와 켤레류 크기가 같은 원소로 제한하고, 찾은 사상은 모든 쌍에 대해 다시 검사함
    :param G: 군 (생성원 필요)
    :return: AutomorphismGroup
    """
    if "aut" in G.cache:
        return G.cache["aut"]

    cap = load_settings().max_table
    if G.order > cap:
        raise CapExceededError(f"automorphism search is capped at order {cap}", order=G.order)

    logger.info(f"Computing Aut({G.name}) (order {G.order}, {len(G.generators)} generators)")
    candidates = [matching_candidates(G, G, s) for s in G.generators]
    found = [images.copy() for images in search_generator_images(G, G, candidates, injective=True)]

    for images in found:
        if not is_homomorphism_table(G, G, images):
            logger.error(f"Automorphism candidate of {G.name} failed the pair check")
            raise EngineInvariantError("automorphism candidate failed the full pair check", group=G.name)

    action = np.array(found, dtype=np.int64).reshape(len(found), G.order)
    generators = list(G.generators)
    codes = _image_codes(action[:, generators], G.order)
    identity_code = _image_codes(np.array(generators, dtype=np.int64), G.order)
    # 항등 사상이 carrier 의 index 0, 나머지는 code 오름차순
    ranking = np.lexsort((codes, codes != identity_code))

    aut = AutomorphismGroup(G, action[ranking])
    logger.info(f"Aut({G.name}) has order {aut.order}, Inn index {aut.outer_order()}")

    expected_inner = G.order // center(G).order
    if aut.inner.order != expected_inner:
        raise EngineInvariantError("inner automorphism count disagrees with |G|/|Z(G)|",
                                   group=G.name, inner=aut.inner.order, expected=expected_inner)

    G.cache["aut"] = aut
    return aut


# ========== 준동형사상 열거 ==========
_shared: dict = {}


def _install_search(S: FiniteGroup, T: FiniteGroup, candidates: list, sequence: list) -> None:
    _shared["search"] = (S, T, candidates, sequence)


def _search_chunk(first_values: np.ndarray) -> list[np.ndarray]:
    S, T, candidates, sequence = _shared["search"]
    restricted = list(candidates)
    restricted[sequence[0]] = first_values
    return [images.copy() for images in search_generator_images(S, T, restricted, sequence=sequence)]


def homomorphism_candidates(S: FiniteGroup, T: FiniteGroup) -> list[np.ndarray]:
    # 생성원 s 의 상은 위수가 |s| 를 나누는 원소
    return [np.flatnonzero(S.elt_order[s] % T.elt_order == 0) for s in S.generators]


def enumerate_homomorphisms(S: FiniteGroup, T: FiniteGroup, kernel_filter: Subgroup | None = None,
                            surjective_to: Subgroup | None = None, jobs: int | None = None) -> Iterator[Homomorphism]:
    """
    모든 준동형사상 S -> T 를 결정적인 순서로 한 번씩 내보내는 기능
    :param S: 정의역
    :param T: 공역
    :param kernel_filter: 주어지면 핵이 정확히 이 부분군인 것만
    :param surjective_to: 주어지면 상이 정확히 이 부분군인 것만
    :param jobs: worker 수 (기본값: HGS_JOBS), 결과 순서는 worker 수와 무관
    :return: Homomorphism iterator
    """
    jobs = load_settings().jobs if jobs is None else jobs
    candidates = homomorphism_candidates(S, T)

    if not S.generators:
        stream: Iterator[np.ndarray] = iter([np.zeros(1, dtype=np.int64)])
    elif jobs <= 1:
        stream = search_generator_images(S, T, candidates)
    else:
        # 가장 바깥 생성원의 후보를 나누어 병렬로 탐색하고 조각 순서대로 합침
        sequence = sorted(range(len(candidates)), key=lambda j: (len(candidates[j]), j))
        chunks = split_evenly(candidates[sequence[0]], jobs)
        parts = run_partitioned(_search_chunk, chunks, jobs,
                                initializer=_install_search, initargs=(S, T, candidates, sequence))
        stream = (images for part in parts for images in part)

    for images in stream:
        hom = Homomorphism(S, T, images)
        if kernel_filter is not None and not np.array_equal(hom.kernel.members, kernel_filter.members):
            continue
        if surjective_to is not None and not np.array_equal(hom.image.members, surjective_to.members):
            continue
        yield hom


def count_homomorphisms(S: FiniteGroup, T: FiniteGroup, kernel_filter: Subgroup | None = None,
                        surjective_to: Subgroup | None = None) -> int:
    return sum(1 for _ in enumerate_homomorphisms(S, T, kernel_filter, surjective_to))


def surjections_onto_cyclic(G: FiniteGroup, q: int) -> list[Homomorphism]:
    """
    G -> C_q 전사 준동형사상 목록 (지표 q 부분군의 핵 탐색에 사용)
    """
    from Engine.group_core import cyclic_group
    target = cyclic_group(q)
    whole = Subgroup(target, np.arange(q))
    return list(enumerate_homomorphisms(G, target, surjective_to=whole))


def index_subgroups_by_kernels(G: FiniteGroup, q: int) -> list[Subgroup]:
    # 같은 핵을 주는 전사는 하나로 묶음
    seen: dict[bytes, Subgroup] = {}
    for hom in surjections_onto_cyclic(G, q):
        seen.setdefault(hom.kernel.members.tobytes(), hom.kernel)
    return sorted(seen.values(), key=lambda K: tuple(K.members))


__all__ = [
    "Homomorphism", "AutomorphismGroup", "identity_map", "conjugation_images", "fixed_points",
    "automorphism_group", "enumerate_homomorphisms", "count_homomorphisms",
    "homomorphism_candidates", "surjections_onto_cyclic", "index_subgroups_by_kernels",
]
