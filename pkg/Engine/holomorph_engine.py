"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Holomorph Engine Part
"""

# Libraries
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Iterator, Sequence

import os

import numpy as np

from Engine.group_core import (IDENTITY, FiniteGroup, NormalSubgroup, Subgroup, center, quotient_group)
from Engine.morphisms import (AutomorphismGroup, Homomorphism, automorphism_group, enumerate_homomorphisms,
                              fixed_points)
from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *
from Utilities.pool_tools import run_partitioned, split_evenly

logger = get_logger("HGS_Holomorph")

# 작용 규칙: 쌍 (eta, alpha) 는 x -> alpha(x) * eta^-1 로 N 위에 작용함
CONVENTION = "rho-side"
CHECKPOINT_HEADER = "hgs-checkpoint/1"


# ========== 홀로모프 ==========
class Holomorph:
    """
    Hol(N) = rho(N) x| Aut(N) 을 쌍 (eta, alpha) 로 표현, 곱셈표는 만들지 않음
    곱: (eta1, alpha1)(eta2, alpha2) = (eta1 * alpha1(eta2), alpha1 alpha2)
    """

    def __init__(self, base: FiniteGroup, aut: AutomorphismGroup):
        self.base = base
        self.aut = aut

    def __repr__(self) -> str:
        return f"<Holomorph(base='{self.base.name}', order={self.order})>"

    @property
    def order(self) -> int:
        return self.base.order * self.aut.order

    def multiply(self, first: tuple[int, int], second: tuple[int, int]) -> tuple[int, int]:
        eta1, alpha1 = first
        eta2, alpha2 = second
        return (int(self.base.mul[eta1, self.aut.action[alpha1][eta2]]),
                int(self.aut.carrier.mul[alpha1, alpha2]))

    def inverse(self, element: tuple[int, int]) -> tuple[int, int]:
        eta, alpha = element
        alpha_inv = int(self.aut.carrier.inv[alpha])
        return int(self.aut.action[alpha_inv][self.base.inv[eta]]), alpha_inv

    def as_permutation(self, element: tuple[int, int]) -> np.ndarray:
        eta, alpha = element
        return self.base.mul[self.aut.action[alpha], self.base.inv[eta]].astype(np.int64)

    def permutations_of(self, etas: np.ndarray, alphas: np.ndarray) -> np.ndarray:
        # (B, |N|) 배열, 행 i 는 (etas[i], alphas[i]) 의 작용
        etas = np.asarray(etas, dtype=np.int64)
        return self.base.mul[self.aut.action[alphas], self.base.inv[etas][:, None]].astype(np.int64)

    def decompose(self, perm: np.ndarray) -> tuple[int, int] | None:
        """
        N 위의 순열이 Hol(N) 의 원소이면 쌍 (eta, alpha) 로, 아니면 None
        """
        perm = np.asarray(perm, dtype=np.int64)
        eta = int(self.base.inv[perm[IDENTITY]])
        alpha = self.aut.index_of(self.base.mul[perm, eta])
        return None if alpha is None else (eta, alpha)

    def contains_all(self, perms: np.ndarray) -> bool:
        perms = np.asarray(perms, dtype=np.int64)
        etas = self.base.inv[perms[:, IDENTITY]]
        alphas = self.aut.indices_of(self.base.mul[perms, etas[:, None]])
        return bool((alphas >= 0).all())

    def lambda_pair(self, gamma: int) -> tuple[int, int]:
        # lambda(gamma): x -> gamma x = conj(gamma)(x) * gamma
        return int(self.base.inv[gamma]), int(self.aut.inner_map[gamma])

    def rho_pair(self, gamma: int) -> tuple[int, int]:
        # rho(gamma): x -> x gamma^-1
        return int(gamma), IDENTITY


def build_holomorph(N: FiniteGroup) -> Holomorph:
    """
    N 의 홀로모프를 쌍 표현으로 만드는 기능
    :param N: 군
    :return: Holomorph
    """
    return Holomorph(N, automorphism_group(N))


def left_regular(G: FiniteGroup) -> np.ndarray:
    # lambda(g)[x] = g x
    return G.mul.astype(np.int64)


def right_regular(G: FiniteGroup) -> np.ndarray:
    # rho(g)[x] = x g^-1
    return G.mul[:, G.inv].T.astype(np.int64)


# ========== 정칙 부분군 ==========
@dataclass(eq=False)
class RegularSubgroup:
    """
    {0..d-1} 위의 정칙 부분군
    perms[v] 는 0 을 v 로 보내는 유일한 원소 (xi 순서), 따라서 perms[0] 은 항등 순열
    """
    perms: np.ndarray
    ambient: str
    iso_type: str | None = None

    def __post_init__(self):
        perms = np.asarray(self.perms, dtype=np.int64)
        if perms.ndim != 2 or perms.shape[0] != perms.shape[1] \
                or not np.array_equal(np.sort(perms[:, IDENTITY]), np.arange(perms.shape[0])):
            raise PreconditionError("evaluation at 0 is not a bijection", ambient=self.ambient)
        ordered = np.empty_like(perms)
        ordered[perms[:, IDENTITY]] = perms
        self.perms = ordered
        self.perms.setflags(write=False)

    def __len__(self) -> int:
        return len(self.perms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegularSubgroup):
            return NotImplemented
        return np.array_equal(self.perms, other.perms)

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def key(self) -> bytes:
        return self.perms.tobytes()

    @property
    def degree(self) -> int:
        return self.perms.shape[1]

    def is_regular(self) -> bool:
        # xi 는 생성 시 확인했으므로 곱에 대해 닫혀 있는지만 봄
        if not (np.sort(self.perms, axis=1) == np.arange(self.degree)).all():
            return False
        products = self.perms[:, self.perms]
        return bool(np.array_equal(products, self.perms[products[:, :, IDENTITY]]))

    def contains(self, perm: np.ndarray) -> bool:
        perm = np.asarray(perm, dtype=np.int64)
        return bool(np.array_equal(self.perms[perm[IDENTITY]], perm))

    def as_group(self, name: str = "") -> FiniteGroup:
        """
        xi 로 번호를 붙인 FiniteGroup (원소 v 는 perms[v])
        """
        # (p_i o p_j)(0) = p_i(p_j(0)) = p_i(j)
        table = self.perms[:, np.arange(self.degree)]
        return FiniteGroup(table, name=name or self.iso_type or f"R{self.degree}", check=False)

    def is_abelian(self) -> bool:
        table = self.perms[:, np.arange(self.degree)]
        return bool(np.array_equal(table, table.T))


def regular_from_pairs(hol: Holomorph, etas: np.ndarray, alphas: np.ndarray, iso_type: str | None = None) -> RegularSubgroup:
    return RegularSubgroup(hol.permutations_of(etas, alphas), ambient=f"Hol({hol.base.name})", iso_type=iso_type)


def dual_regular_subgroup(D: RegularSubgroup) -> RegularSubgroup:
    """
    정칙 부분군 D 의 Perm 안에서의 중심화군 D*
    c(0) = y 인 c 는 c(d_x(0)) = d_x(c(0)) 에서 c(x) = d_x(y) 로 정해짐
    """
    dual = RegularSubgroup(D.perms.T.copy(), ambient=D.ambient, iso_type=D.iso_type)
    if not dual.is_regular():
        logger.error(f"Dual of a regular subgroup in {D.ambient} is not regular")
        raise EngineInvariantError("dual of a regular subgroup is not regular", ambient=D.ambient)
    return dual


def normalized_by(D: RegularSubgroup, generators: np.ndarray) -> bool:
    """
    generators (순열 배열) 로 생성되는 군이 D 를 정규화하는지 판정
    """
    for e in np.asarray(generators, dtype=np.int64).reshape(-1, D.degree):
        e_inv = np.argsort(e)
        conjugates = e[D.perms[:, e_inv]]
        if not np.array_equal(D.perms[conjugates[:, IDENTITY]], conjugates):
            return False
    return True


def regular_lambda(G: FiniteGroup) -> RegularSubgroup:
    return RegularSubgroup(left_regular(G), ambient=f"Perm({G.name})", iso_type=G.name)


def regular_rho(G: FiniteGroup) -> RegularSubgroup:
    return RegularSubgroup(right_regular(G), ambient=f"Perm({G.name})", iso_type=G.name)


def lambda_generators(G: FiniteGroup) -> np.ndarray:
    return left_regular(G)[list(G.generators)] if G.generators else left_regular(G)[:1]


# ========== 교차 준동형사상 ==========
@dataclass(eq=False)
class CrossedHom:
    """
    f: G -> Aut(N) 에 대한 교차 준동형사상 g: G -> N
    g(d1 d2) = g(d1) * f(d1)(g(d2))
    """
    f: Homomorphism
    g: np.ndarray
    aut: AutomorphismGroup
    bijective: bool = field(init=False)

    def __post_init__(self):
        self.g = np.asarray(self.g, dtype=np.int64)
        self.bijective = bool(len(np.unique(self.g)) == self.aut.base.order == self.f.source.order)

    @property
    def source(self) -> FiniteGroup:
        return self.f.source

    @property
    def base(self) -> FiniteGroup:
        return self.aut.base

    def holomorph_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        # delta -> (g(delta), f(delta)) 는 G -> Hol(N) 준동형사상
        return self.g, self.f.images

    def regular_subgroup(self, hol: Holomorph, iso_type: str | None = None) -> RegularSubgroup:
        if not self.bijective:
            raise PreconditionError("only bijective crossed homomorphisms give regular subgroups")
        return regular_from_pairs(hol, self.g, self.f.images, iso_type=iso_type)


def check_crossed_relation(f: Homomorphism, g: np.ndarray, aut: AutomorphismGroup) -> bool:
    """
    모든 쌍 (d1, d2) 에 대한 교차 관계의 전수 검사
    """
    G, N = f.source, aut.base
    lhs = g[G.mul]
    rhs = N.mul[g[:, None], aut.action[f.images[:, None], g[None, :]]]
    return bool(np.array_equal(lhs, rhs))


def _power_values(G: FiniteGroup, N: FiniteGroup, f: Homomorphism, aut: AutomorphismGroup,
                  s: int) -> np.ndarray:
    """
    g(s) = v 로 두었을 때 g(s^k) (k = 1..|s|) 를 모든 v 에 대해 계산, 결과 shape (|s|, |N|)
    마지막 행 g(s^|s|) 는 항등원이어야 함
    """
    m = int(G.elt_order[s])
    values = np.empty((m, N.order), dtype=np.int64)
    values[0] = np.arange(N.order)
    power = s
    for k in range(1, m):
        # g(s^k s) = g(s^k) * f(s^k)(g(s))
        values[k] = N.mul[values[k - 1], aut.action[f.images[power]]]
        power = int(G.mul[power, s])
    return values


def crossed_candidates(f: Homomorphism, aut: AutomorphismGroup, bijective_only: bool) -> list[np.ndarray]:
    """
    생성원 s 마다 g(s) 로 가능한 값: g(s^|s|) = 1 이어야 하고, 전단사이면 g(s^k) 들이 서로 달라야 함
    """
    G, N = f.source, aut.base
    result: list[np.ndarray] = []
    for s in G.generators:
        values = _power_values(G, N, f, aut, s)
        ok = values[-1] == IDENTITY
        if bijective_only:
            # g(s), ..., g(s^|s|) = 1 이 모두 달라야 함
            ordered = np.sort(values, axis=0)
            ok &= (np.diff(ordered, axis=0) != 0).all(axis=0)
        result.append(np.flatnonzero(ok))
    return result


def _extend_crossed(G: FiniteGroup, N: FiniteGroup, f_images: np.ndarray, aut: AutomorphismGroup,
                    gen_values: np.ndarray) -> np.ndarray:
    # word tree 를 따라 g(x s) = g(x) * f(x)(g(s)) 로 층 단위 확장
    values = np.zeros((gen_values.shape[0], G.order), dtype=np.int64)
    for layer in G.layers:
        parents = G.parent[layer]
        twisted = aut.action[f_images[parents][None, :], gen_values[:, G.gen_of[layer]]]
        values[:, layer] = N.mul[values[:, parents], twisted]
    return values


def _respects_crossed(G: FiniteGroup, N: FiniteGroup, f_images: np.ndarray, aut: AutomorphismGroup,
                      values: np.ndarray, gen_values: np.ndarray) -> np.ndarray:
    # 모든 x 와 생성원 s 에 대해 g(x s) = g(x) * f(x)(g(s)) 이면 교차 준동형사상
    ok = np.ones(values.shape[0], dtype=bool)
    for j, s in enumerate(G.generators):
        lhs = values[:, G.mul[:, s]]
        twisted = aut.action[f_images[None, :], gen_values[:, j:j + 1]]
        ok &= (lhs == N.mul[values, twisted]).all(axis=1)
    return ok


def crossed_homomorphisms(f: Homomorphism, aut: AutomorphismGroup, bijective_only: bool = True,
                          full_check: bool | None = None) -> Iterator[CrossedHom]:
    """
    f 에 대한 모든 교차 준동형사상을 결정적인 순서로 내보내는 기능
    :param f: G -> Aut(N) carrier 준동형사상
    :param aut: N 의 AutomorphismGroup
    :param bijective_only: True 이면 전단사인 것만
    :param full_check: 모든 쌍 검사 여부 (기본값: |G| <= 120 일 때만)
    :return: CrossedHom iterator
    """
    G, N = f.source, aut.base
    if f.target is not aut.carrier:
        raise PreconditionError("f must map into the automorphism carrier of N", source=G.name, base=N.name)
    if bijective_only and G.order != N.order:
        return

    full_check = G.order <= 120 if full_check is None else full_check
    k = len(G.generators)

    if k == 0:
        yield CrossedHom(f, np.zeros(1, dtype=np.int64), aut)
        return

    candidates = crossed_candidates(f, aut, bijective_only)
    sequence = sorted(range(k), key=lambda j: (len(candidates[j]), j))
    assigned = np.zeros(k, dtype=np.int64)

    def emit(batch: np.ndarray) -> Iterator[CrossedHom]:
        values = _extend_crossed(G, N, f.images, aut, batch)
        ok = _respects_crossed(G, N, f.images, aut, values, batch)
        if bijective_only:
            ordered = np.sort(values, axis=1)
            ok &= (np.diff(ordered, axis=1) != 0).all(axis=1)
        for row in np.flatnonzero(ok):
            g = values[row].copy()
            if full_check and not check_crossed_relation(f, g, aut):
                logger.error(f"Crossed homomorphism on {G.name} failed the pair check")
                raise EngineInvariantError("crossed homomorphism failed the full pair check",
                                           source=G.name, base=N.name)
            yield CrossedHom(f, g, aut)

    def descend(level: int) -> Iterator[CrossedHom]:
        j = sequence[level]
        if level == k - 1:
            batch = np.repeat(assigned[None, :], len(candidates[j]), axis=0)
            batch[:, j] = candidates[j]
            if batch.shape[0]:
                yield from emit(batch)
            return
        for value in candidates[j]:
            assigned[j] = value
            yield from descend(level + 1)

    yield from descend(0)


def count_bijective_crossed(f: Homomorphism, aut: AutomorphismGroup) -> int:
    return sum(1 for _ in crossed_homomorphisms(f, aut, bijective_only=True, full_check=False))


# ========== h 사상과 그 성질 ==========
def derive_h(c: CrossedHom) -> Homomorphism:
    """
    h(d) = conj(g(d)) * f(d) 를 Aut(N) carrier 의 원소로 계산하는 기능
    :param c: 교차 준동형사상
    :return: 검증된 Homomorphism G -> Aut(N)
    """
    carrier = c.aut.carrier
    h = Homomorphism(c.source, carrier, carrier.mul[c.aut.inner_map[c.g], c.f.images])
    if not h.verify():
        logger.error(f"h map of a crossed homomorphism on {c.source.name} is not multiplicative")
        raise EngineInvariantError("derived h map is not a homomorphism", source=c.source.name)
    return h


def check_h_properties(c: CrossedHom, h: Homomorphism | None = None) -> dict[str, bool]:
    """
    교차 준동형사상의 h 사상 성질을 검사하는 기능
    - a: h 는 준동형사상
    - b: (f, h) 의 고정점 = g^-1(Z(N))
    - c: ker f 위에서 g 는 곱을 보존
    - d: d1 in ker h 이면 g(d1 d2) = g(d2) g(d1)
    :return: 성질 이름별 bool
    """
    G, N = c.source, c.base
    h = derive_h(c) if h is None else h
    report = {"a": h.verify()}

    central = center(N).mask
    report["b"] = bool(np.array_equal(fixed_points(c.f, h), np.flatnonzero(central[c.g])))

    K = c.f.kernel.members
    report["c"] = bool(np.array_equal(c.g[G.mul[np.ix_(K, K)]], N.mul[c.g[K][:, None], c.g[K][None, :]]))

    H = h.kernel.members
    report["d"] = bool(np.array_equal(c.g[G.mul[H]], N.mul[c.g[None, :], c.g[H][:, None]]))
    return report


# ========== 특성 몫으로의 유도 ==========
def induce_on_quotient(c: CrossedHom, Lambda: NormalSubgroup) -> tuple[CrossedHom, Subgroup]:
    """
    특성 부분군 Lambda 에 대해 N/Lambda 위의 교차 준동형사상과 g^-1(Lambda) 를 만드는 기능
    :param c: 교차 준동형사상
    :param Lambda: characteristic 표시가 있는 NormalSubgroup
    :return: (유도된 CrossedHom, G 의 부분군 g^-1(Lambda))
    """
    N = c.base
    if Lambda.characteristic is not True or Lambda.subgroup.parent is not N:
        raise PreconditionError("induction needs a characteristic subgroup of N", base=N.name)

    Q, projection = quotient_group(N, Lambda.subgroup)
    aut_Q = automorphism_group(Q)
    _, representatives = np.unique(projection, return_index=True)

    # f(d) 는 Lambda 를 보존하므로 잉여류 대표로 몫 위의 작용을 계산할 수 있음
    induced_action = projection[c.aut.action[c.f.images][:, representatives]]
    f_bar = aut_Q.indices_of(induced_action)
    if (f_bar < 0).any():
        logger.error(f"Induced action on {Q.name} is not an automorphism")
        raise EngineInvariantError("induced action on the quotient is not an automorphism", base=N.name)

    induced = CrossedHom(Homomorphism(c.source, aut_Q.carrier, f_bar), projection[c.g], aut_Q)
    preimage = Subgroup(c.source, np.flatnonzero(projection[c.g] == IDENTITY))
    if not preimage.is_closed():
        logger.error(f"Preimage of {Lambda.subgroup} under g is not a subgroup")
        raise EngineInvariantError("preimage of a characteristic subgroup is not a subgroup", base=N.name)
    return induced, preimage


# ========== 정칙 부분군 개수 (Byott 경로) ==========
@dataclass
class RegularCount:
    pair_count: int
    subgroup_count: int
    f_count: int
    samples: list[RegularSubgroup] = field(default_factory=list)
    checkpoint_id: str | None = None


_shared: dict = {}


def _install_count(G: FiniteGroup, N: FiniteGroup, aut: AutomorphismGroup, f_images: list[np.ndarray],
                   collect: bool) -> None:
    _shared["count"] = (G, N, aut, f_images, collect)


def _count_chunk(indices: Sequence[int]) -> tuple[int, list[np.ndarray]]:
    G, N, aut, f_images, collect = _shared["count"]
    total = 0
    found: list[np.ndarray] = []
    hol = Holomorph(N, aut)
    for index in indices:
        f = Homomorphism(G, aut.carrier, f_images[index])
        for c in crossed_homomorphisms(f, aut, bijective_only=True, full_check=False):
            total += 1
            if collect:
                found.append(regular_from_pairs(hol, c.g, c.f.images).perms)
    return total, found


def regular_subgroups_in_holomorph(N: FiniteGroup, G: FiniteGroup, collect: bool = False,
                                   checkpoint: str | Path | None = None, resume: str | Path | None = None,
                                   jobs: int | None = None) -> RegularCount:
    """
    Hol(N) 안의 G 와 동형인 정칙 부분군 개수를 세는 기능
    f in Hom(G, Aut(N)) 마다 전단사 교차 준동형사상을 세어 합함 (pair_count)
    :param N: 홀로모프의 밑군
    :param G: 정칙 부분군의 동형 유형
    :param collect: True 이면 서로 다른 부분군을 모아서 반환
    :param checkpoint: 진행 상황을 기록할 파일 경로
    :param resume: 이어서 계산할 checkpoint 파일 경로
    :param jobs: worker 수 (결과와 무관)
    :return: RegularCount
    """
    settings = load_settings()
    jobs = settings.jobs if jobs is None else jobs
    if G.order != N.order:
        return RegularCount(0, 0, 0)

    aut_N = automorphism_group(N)
    aut_G = automorphism_group(G)
    fs = [hom.images for hom in enumerate_homomorphisms(G, aut_N.carrier, jobs=jobs)]
    logger.info(f"Regular subgroups of Hol({N.name}) of type {G.name}: {len(fs)} maps into Aut({N.name})")

    start, pair_count, checkpoint_id = 0, 0, None
    if resume is not None:
        state = read_checkpoint(resume)
        verify_checkpoint(state, G, N)
        start, pair_count = state["last_f"] + 1, state["pair_count"]
        checkpoint_id = f"{Path(resume).name}@{state['last_f']}"
        logger.info(f"Resuming from f-index {start} with pair count {pair_count}")

    found: dict[bytes, np.ndarray] = {}
    block = settings.checkpoint_every if checkpoint is not None else max(len(fs), 1)

    for block_start in range(start, len(fs), block):
        indices = list(range(block_start, min(block_start + block, len(fs))))
        parts = run_partitioned(_count_chunk, split_evenly(indices, jobs), jobs,
                                initializer=_install_count, initargs=(G, N, aut_N, fs, collect))
        for total, perms_list in parts:
            pair_count += total
            for perms in perms_list:
                found.setdefault(perms.tobytes(), perms)

        if checkpoint is not None:
            write_checkpoint(checkpoint, G, N, indices[-1], pair_count)

    subgroup_count, remainder = divmod(pair_count, aut_G.order)
    if remainder:
        logger.error(f"Pair count {pair_count} is not divisible by |Aut({G.name})| = {aut_G.order}")
        raise EngineInvariantError("pair count is not divisible by |Aut(G)|",
                                   pair_count=pair_count, aut_order=aut_G.order)

    samples = [RegularSubgroup(found[key], ambient=f"Hol({N.name})", iso_type=G.name) for key in sorted(found)]
    if collect and resume is None and len(samples) != subgroup_count:
        raise EngineInvariantError("collected subgroups disagree with the pair count",
                                   collected=len(samples), expected=subgroup_count)

    logger.info(f"Hol({N.name}) holds {subgroup_count} regular {G.name} subgroups ({pair_count} pairs)")
    return RegularCount(pair_count, subgroup_count, len(fs), samples, checkpoint_id)


# ========== checkpoint 파일 ==========
def write_checkpoint(path: str | Path, G: FiniteGroup, N: FiniteGroup, last_f: int, pair_count: int) -> None:
    """
    한 줄에 한 항목씩 기록하는 checkpoint 파일 (임시 파일에 쓴 뒤 교체)
    """
    path = Path(path)
    lines = [
        CHECKPOINT_HEADER,
        f"g_digest {G.digest}",
        f"n_digest {N.digest}",
        f"convention {CONVENTION}",
        f"last_f {last_f}",
        f"pair_count {pair_count}",
    ]
    temporary = path.with_name(path.name + ".tmp")
    temporary.write_text("\n".join(lines) + "\n", encoding="utf-8")
    os.replace(temporary, path)
    logger.info(f"Checkpoint written: {path} (f-index {last_f}, pairs {pair_count})")


def read_checkpoint(path: str | Path) -> dict:
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as error:
        raise CheckpointError(f"cannot read checkpoint: {error}", path=path)

    if not lines or lines[0].strip() != CHECKPOINT_HEADER:
        raise CheckpointError("not a checkpoint file", path=path)

    state: dict = {}
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        key, _, value = line.strip().partition(" ")
        if key in ("last_f", "pair_count"):
            try:
                state[key] = int(value)
            except ValueError:
                raise CheckpointError(f"line {number}: {key} is not an integer", path=path)
        else:
            state[key] = value

    missing = {"g_digest", "n_digest", "convention", "last_f", "pair_count"} - state.keys()
    if missing:
        raise CheckpointError(f"checkpoint is missing {sorted(missing)}", path=path)
    return state


def verify_checkpoint(state: dict, G: FiniteGroup, N: FiniteGroup) -> None:
    if state["convention"] != CONVENTION:
        raise CheckpointError("checkpoint was written under another convention", convention=state["convention"])
    if state["g_digest"] != G.digest or state["n_digest"] != N.digest:
        raise CheckpointError("checkpoint belongs to another pair of groups", g=G.name, n=N.name)


# ========== 정규화군 검사 ==========
def holomorph_permutations(hol: Holomorph) -> np.ndarray:
    n, m = hol.base.order, hol.aut.order
    etas = np.repeat(np.arange(n), m)
    alphas = np.tile(np.arange(m), n)
    return hol.permutations_of(etas, alphas)


def normalizer_in_symmetric(generators: np.ndarray, degree: int) -> set[tuple[int, ...]]:
    """
    Perm({0..d-1}) 전체를 훑어 generators 로 생성되는 정칙 부분군의 정규화군을 구하는 기능 (d <= 6)
    """
    if degree > 6:
        raise CapExceededError("symmetric scan is limited to degree 6", degree=degree)

    generators = np.asarray(generators, dtype=np.int64).reshape(-1, degree)
    group = _closure_of_perms(generators, degree)
    members = {tuple(p) for p in group}

    result: set[tuple[int, ...]] = set()
    for candidate in permutations(range(degree)):
        pi = np.array(candidate)
        pi_inv = np.argsort(pi)
        if all(tuple(pi[g[pi_inv]]) in members for g in generators):
            result.add(candidate)
    return result


def _closure_of_perms(generators: np.ndarray, degree: int) -> list[np.ndarray]:
    identity = tuple(range(degree))
    seen = {identity: np.arange(degree)}
    frontier = [np.arange(degree)]
    while frontier:
        following = []
        for x in frontier:
            for g in generators:
                y = x[g]
                key = tuple(y)
                if key not in seen:
                    seen[key] = y
                    following.append(y)
        frontier = following
    return list(seen.values())


def holomorph_is_normalizer(G: FiniteGroup) -> bool:
    """
    Perm(G) 에서 lambda(G) 의 정규화군 = Hol(G) 의 상 = rho(G) 의 정규화군 인지 전수 검사 (|G| <= 6)
    """
    hol = build_holomorph(G)
    image = {tuple(p) for p in holomorph_permutations(hol)}
    lam = normalizer_in_symmetric(left_regular(G), G.order)
    rho = normalizer_in_symmetric(right_regular(G), G.order)
    return lam == image == rho


def normalized_by_exactly_one(D: RegularSubgroup, N: FiniteGroup) -> bool:
    """
    Hol(N) 의 정칙 부분군이 lambda(N), rho(N) 중 정확히 하나에 의해 정규화되는지 판정
    """
    by_lambda = normalized_by(D, lambda_generators(N))
    by_rho = normalized_by(D, right_regular(N)[list(N.generators)] if N.generators else right_regular(N)[:1])
    return by_lambda != by_rho


__all__ = [
    "CONVENTION", "Holomorph", "build_holomorph", "left_regular", "right_regular",
    "RegularSubgroup", "regular_from_pairs", "dual_regular_subgroup", "normalized_by",
    "regular_lambda", "regular_rho", "lambda_generators", "CrossedHom", "check_crossed_relation",
    "crossed_candidates", "crossed_homomorphisms", "count_bijective_crossed", "derive_h",
    "check_h_properties", "induce_on_quotient", "RegularCount", "regular_subgroups_in_holomorph",
    "write_checkpoint", "read_checkpoint", "verify_checkpoint", "holomorph_permutations",
    "normalizer_in_symmetric", "holomorph_is_normalizer", "normalized_by_exactly_one",
]
