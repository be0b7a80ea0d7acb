"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Hopf-Galois Counting Part
"""

# Libraries
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from itertools import permutations
from typing import Iterator, Literal, Sequence

import time

import numpy as np
from pydantic import BaseModel, Field

from Engine.group_core import (FiniteGroup, Perm, are_isomorphic, group_from_permutations, order_census,
                               symmetric_order_census)
from Engine.holomorph_engine import (RegularSubgroup, build_holomorph, dual_regular_subgroup,
                                     lambda_generators, normalized_by, regular_lambda, regular_rho,
                                     regular_subgroups_in_holomorph)
from Engine.morphisms import automorphism_group, enumerate_homomorphisms
from Engine.structure_screen import (StructureKind, almost_simple_data, check_theorem_old_hypothesis,
                                     classify_group)
from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *
from Utilities.pool_tools import run_partitioned, split_evenly

logger = get_logger("HGS_Count")


# ========== 결과 모델 ==========
class CountMethod(str, Enum):
    FORMULA_THM_OLD = "formula-thm-old"
    FORMULA_THM1 = "formula-thm1"
    FORMULA_SN = "formula-sn"
    BYOTT = "byott"
    FPF_INHOL = "fpf-inhol"
    BRUTE_PERM = "brute-perm"
    HOLOMORPH_DUAL = "holomorph-dual"


class CountResult(BaseModel):
    g_label: str
    n_label: str
    value: int = Field(ge=0)
    method: CountMethod
    runtime_ms: float = 0.0
    conditional: bool = False
    checkpoint_id: str | None = None
    notes: list[str] = Field(default_factory=list)


@contextmanager
def _stopwatch() -> Iterator[dict]:
    clock = {"start": time.perf_counter()}
    yield clock
    clock["ms"] = (time.perf_counter() - clock["start"]) * 1000.0


def _exact_division(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        logger.error(f"Non-exact division in {what}: {numerator} / {denominator}")
        raise EngineInvariantError(f"non-exact division in {what}", numerator=numerator, denominator=denominator)
    return quotient


# ========== 닫힌 공식 ==========
def e_formula_theorem_old(G: FiniteGroup) -> CountResult:
    """
    e(G, G) = 2 + 2 #{A 의 위수 p 원소} + 2 (p-2)/(p-1) #{G - A 의 위수 p 원소}
    Aut(G) 안의 G 복사본이 Inn(G) 뿐이라는 가설을 확인하지 못하면 conditional 로 표시
    :param G: 소수 지표 socle 을 가진 almost simple 군
    :return: CountResult
    """
    with _stopwatch() as clock:
        A, p = almost_simple_data(G)
        inside = order_census(G, p, "inside", A)
        outside = order_census(G, p, "outside", A)

        outer_term = _exact_division((p - 2) * outside, p - 1, "the outer order-p term")
        if p == 2 and outer_term != 0:
            raise EngineInvariantError("outer term must vanish for p = 2", outside=outside)
        value = 2 + 2 * inside + 2 * outer_term

        notes = [f"p = {p}", f"order-p census inside A = {inside}, outside A = {outside}"]
        conditional = False
        try:
            hypothesis = check_theorem_old_hypothesis(G)
            conditional = not hypothesis.holds
            notes.extend(hypothesis.witnesses)
        except InfeasibleError as error:
            conditional = True
            notes.append(f"hypothesis not checked: {error.message}")

    if conditional:
        logger.warning(f"e({G.name}, {G.name}) = {value} is conditional: Inn is not shown to be the only copy")

    return CountResult(g_label=G.name, n_label=G.name, value=value, method=CountMethod.FORMULA_THM_OLD,
                       runtime_ms=clock["ms"], conditional=conditional, notes=notes)


def e_formula_theorem1(G: FiniteGroup, n_label: str | None = None) -> CountResult:
    """
    e(G, A x C_p) = 2 / (p-1) #{sigma in G - A : sigma 의 위수 p}
    """
    with _stopwatch() as clock:
        A, p = almost_simple_data(G)
        outside = order_census(G, p, "outside", A)
        value = 2 * _exact_division(outside, p - 1, "the (p-1)-orbit count")

    return CountResult(g_label=G.name, n_label=n_label or f"Soc({G.name})xC{p}", value=value,
                       method=CountMethod.FORMULA_THM1, runtime_ms=clock["ms"],
                       notes=[f"p = {p}", f"order-p elements outside A = {outside}"])


def symmetric_group(n: int) -> FiniteGroup:
    cycle = Perm(tuple((i + 1) % n for i in range(n)))
    swap = Perm.from_cycles("(0 1)", n)
    return group_from_permutations([cycle, swap], name=f"S{n}")


def _is_even(G: FiniteGroup) -> np.ndarray:
    parity = np.array([sum(len(c) - 1 for c in G.perm_rep.perm(x).cycles()) % 2 == 0 for x in range(G.order)])
    return parity


def e_formula_sn(n: int, kind: Literal["Sn", "AnxC2"]) -> CountResult:
    """
    대칭군에 대한 닫힌 공식
    - Sn:    e(S_n, S_n) = 2 + 2 #{A_n 의 위수 2 원소}
    - AnxC2: e(S_n, A_n x C_2) = 2 #{S_n - A_n 의 위수 2 원소}
    n <= 6 이면 곱셈표 census 와 순환형 census 를 서로 비교함
    """
    if not 5 <= n <= 10:
        raise PreconditionError("symmetric formulas are available for 5 <= n <= 10", n=n)
    if kind not in ("Sn", "AnxC2"):
        raise PreconditionError(f"unknown symmetric formula kind {kind}")

    with _stopwatch() as clock:
        even = symmetric_order_census(n, 2, "even")
        odd = symmetric_order_census(n, 2, "odd")

        if n <= 6:
            S = symmetric_group(n)
            parity = _is_even(S)
            involutions = S.elt_order == 2
            if (int((involutions & parity).sum()), int((involutions & ~parity).sum())) != (even, odd):
                raise EngineInvariantError("cycle-type census disagrees with the table census", n=n)

        value = 2 + 2 * even if kind == "Sn" else 2 * odd

    n_label = f"S{n}" if kind == "Sn" else f"A{n}xC2"
    return CountResult(g_label=f"S{n}", n_label=n_label, value=value, method=CountMethod.FORMULA_SN,
                       runtime_ms=clock["ms"], notes=[f"even involutions = {even}", f"odd involutions = {odd}"])


# ========== Byott 변환 ==========
def e_byott(G: FiniteGroup, N: FiniteGroup, checkpoint: str | Path | None = None,
            resume: str | Path | None = None, jobs: int | None = None) -> CountResult:
    """
    e(G, N) = (Hol(N) 안의 G 형 정칙 부분군 매개화 쌍의 수) / |Aut(N)|
    :param G: Galois 군
    :param N: 구조의 유형
    :param checkpoint: f-index 단위 진행 기록 파일
    :param resume: 이어서 계산할 checkpoint 파일
    :param jobs: worker 수
    :return: CountResult
    """
    if G.order != N.order:
        raise PreconditionError("G and N must have the same order", g=G.order, n=N.order)

    with _stopwatch() as clock:
        result = regular_subgroups_in_holomorph(N, G, checkpoint=checkpoint, resume=resume, jobs=jobs)
        aut_N = automorphism_group(N)
        value = _exact_division(result.pair_count, aut_N.order, "the Byott scaling")

    logger.info(f"Byott count e({G.name}, {N.name}) = {value}")
    return CountResult(g_label=G.name, n_label=N.name, value=value, method=CountMethod.BYOTT,
                       runtime_ms=clock["ms"], checkpoint_id=result.checkpoint_id,
                       notes=[f"pairs = {result.pair_count}", f"regular subgroups = {result.subgroup_count}",
                              f"maps into Aut(N) = {result.f_count}"])


# ========== 내부 홀로모프의 고정점 없는 쌍 ==========
def e_fpf_inhol(G: FiniteGroup, N: FiniteGroup) -> CountResult:
    """
    N = A x C_p 에 대한 고정점 없는 쌍 (f, h) 의 계산
    e1 = #{f : ker f = C_p}, e2 = #{h : ker h = A, h(epsilon) not in A}
    e(G, N) = 2 e1 e2 / ((p-1) |Aut(A)|)
    """
    with _stopwatch() as clock:
        A, p = almost_simple_data(G)
        structure = classify_group(N)
        if structure.kind != StructureKind.DIRECT_PRODUCT or structure.index != p \
                or are_isomorphic(structure.socle.group, A.group) is None:
            raise PreconditionError("N must be A x C_p for the socle A of G", n=N.name, kind=structure.describe())

        simple_factor, cyclic_factor = structure.socle, structure.factor
        epsilon = int(cyclic_factor.members[1])

        e1 = sum(1 for _ in enumerate_homomorphisms(N, G, kernel_filter=cyclic_factor))
        e2 = sum(1 for h in enumerate_homomorphisms(N, G, kernel_filter=simple_factor) if not A.mask[h(epsilon)])
        aut_N_order = (p - 1) * automorphism_group(A.group).order
        value = _exact_division(2 * e1 * e2, aut_N_order, "the fixed-point-free pair count")

    return CountResult(g_label=G.name, n_label=N.name, value=value, method=CountMethod.FPF_INHOL,
                       runtime_ms=clock["ms"], notes=[f"e1 = {e1}", f"e2 = {e2}", f"|Aut(N)| = {aut_N_order}"])


# ========== Perm(G) 전수 탐색 ==========
@dataclass
class BruteCensus:
    g_label: str
    counts: dict[str, int]
    subgroups: list[RegularSubgroup] = field(default_factory=list)
    types: list[FiniteGroup] = field(default_factory=list)

    def count_for(self, N: FiniteGroup) -> int:
        for label, representative in zip(self.counts, self.types):
            if are_isomorphic(representative, N) is not None:
                return self.counts[label]
        return 0


def _divisors(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def _cycle_fill(images: list[int], remaining: list[int], length: int,
                first_image: int | None) -> Iterator[np.ndarray]:
    if not remaining:
        yield np.array(images, dtype=np.int64)
        return

    start, pool = remaining[0], remaining[1:]
    pinned = first_image if start == 0 else None
    if pinned is not None:
        if pinned not in pool:
            return
        tails = ((pinned,) + rest for rest in permutations([x for x in pool if x != pinned], length - 2))
    else:
        tails = permutations(pool, length - 1)

    for tail in tails:
        cycle = (start,) + tail
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
        used = set(tail)
        yield from _cycle_fill(images, [x for x in pool if x not in used], length, None)
        for a in cycle:
            images[a] = -1


def semiregular_permutations(n: int, first_image: int | None = None) -> Iterator[np.ndarray]:
    """
    {0..n-1} 위의 고정점 없는 순열 중 모든 순환의 길이가 같은 (n 의 약수) 것을 차례로 생성
    정칙 부분군의 비항등 원소는 모두 이런 꼴임
    :param n: 점의 수
    :param first_image: 주어지면 0 을 이 점으로 보내는 순열만 생성
    """
    for length in _divisors(n):
        yield from _cycle_fill([-1] * n, list(range(n)), length, first_image)


_shared: dict = {}


def _install_brute(mul: np.ndarray, inv: np.ndarray) -> None:
    _shared["brute"] = (mul, inv)
    _shared["candidates"] = {}


def _candidates_to(target: int, n: int) -> list[np.ndarray]:
    cache = _shared["candidates"]
    if target not in cache:
        cache[target] = list(semiregular_permutations(n, target))
    return cache[target]


def _semiregular_closure(members: dict[tuple, np.ndarray], extra: np.ndarray,
                         n: int) -> dict[tuple, np.ndarray] | None:
    """
    members 와 extra 로 생성되는 군, 위수가 n 을 넘거나 고정점 있는 비항등 원소가 생기면 None
    """
    points = np.arange(n)
    identity = tuple(range(n))
    group = dict(members)
    for p in extra:
        group.setdefault(tuple(p), p)
    if len(group) > n:
        return None

    generators = list(group.values())
    frontier = list(generators)
    while frontier:
        following = []
        for x in frontier:
            for g in generators:
                y = x[g]
                key = tuple(y)
                if key in group:
                    continue
                if key != identity and (y == points).any():
                    return None
                group[key] = y
                if len(group) > n:
                    return None
                following.append(y)
        frontier = following

    if any(key != identity and (p == points).any() for key, p in group.items()):
        return None
    return group if n % len(group) == 0 else None


def _lambda_orbit(d: np.ndarray, mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    # lambda(g) d lambda(g)^-1 = mul[g][d[mul[g^-1]]]
    return np.unique(mul[np.arange(len(mul))[:, None], d[mul[inv]]], axis=0)


def _brute_subtree(seeds: Sequence[int]) -> list[bytes]:
    mul, inv = _shared["brute"]
    n = len(mul)
    found: dict[bytes, None] = {}
    visited: set[bytes] = set()

    def grow(group: dict[tuple, np.ndarray]) -> None:
        key = np.array(sorted(group.keys()), dtype=np.int64).tobytes()
        if key in visited:
            return
        visited.add(key)
        if len(group) == n:
            found[key] = None
            return
        covered = {int(p[0]) for p in group.values()}
        target = min(y for y in range(n) if y not in covered)
        for d in _candidates_to(target, n):
            extended = _semiregular_closure(group, _lambda_orbit(d, mul, inv), n)
            if extended is not None:
                grow(extended)

    identity = np.arange(n)
    base = {tuple(identity): identity}
    first_level = _candidates_to(1, n)
    for index in seeds:
        extended = _semiregular_closure(base, _lambda_orbit(first_level[index], mul, inv), n)
        if extended is not None:
            grow(extended)
    return list(found)


def e_brute_perm(G: FiniteGroup, allow_12: bool = False, types: Sequence[FiniteGroup] = (),
                 jobs: int | None = None) -> BruteCensus:
    """
    Perm(G) 의 정칙 부분군 중 lambda(G) 로 정규화되는 것을 전부 찾아 동형 유형별로 세는 기능
    정규화 조건 때문에 부분군은 lambda(G) 켤레 궤도의 합집합이므로 궤도 단위로 키워 나감
    :param G: 군 (|G| <= 8, 플래그가 있으면 12)
    :param allow_12: |G| <= 12 까지 허용
    :param types: 유형 이름을 붙일 때 쓰는 대표군 목록
    :param jobs: worker 수
    :return: BruteCensus
    """
    settings = load_settings()
    cap = 12 if (allow_12 or settings.brute_allow_12) else settings.brute_cap
    if G.order > cap:
        raise CapExceededError(f"brute-force oracle is capped at order {cap}", order=G.order, cap=cap)

    jobs = settings.jobs if jobs is None else jobs
    n = G.order
    logger.info(f"Brute-force regular subgroup scan of Perm({G.name})")

    if n == 1:
        keys = [np.zeros((1, 1), dtype=np.int64).tobytes()]
    else:
        mul, inv = G.mul.astype(np.int64), G.inv.astype(np.int64)
        _install_brute(mul, inv)
        seeds = list(range(len(_candidates_to(1, n))))
        parts = run_partitioned(_brute_subtree, split_evenly(seeds, jobs), jobs,
                                initializer=_install_brute, initargs=(mul, inv))
        keys = sorted({key for part in parts for key in part})

    subgroups: list[RegularSubgroup] = []
    generators = lambda_generators(G)
    for key in keys:
        perms = np.frombuffer(key, dtype=np.int64).reshape(n, n)
        D = RegularSubgroup(perms.copy(), ambient=f"Perm({G.name})")
        if not D.is_regular() or not normalized_by(D, generators):
            logger.error(f"Brute-force scan of {G.name} produced an invalid subgroup")
            raise EngineInvariantError("brute-force subgroup is not regular or not normalized", group=G.name)
        subgroups.append(D)

    counts: dict[str, int] = {}
    representatives: list[FiniteGroup] = []
    for D in subgroups:
        H = D.as_group()
        label = next((label for label, R in zip(counts, representatives) if are_isomorphic(R, H) is not None), None)
        if label is None:
            named = next((T for T in types if T.order == n and are_isomorphic(T, H) is not None), None)
            label = named.name if named is not None else f"order{n}-type{len(counts) + 1}"
            counts[label] = 0
            representatives.append(named if named is not None else H)
        counts[label] += 1
        D.iso_type = label

    logger.info(f"Perm({G.name}) census: {counts}")
    return BruteCensus(g_label=G.name, counts=counts, subgroups=subgroups, types=representatives)


# ========== 홀로모프 쌍대 공식 ==========
class DualityProfile(BaseModel):
    g_label: str
    n_label: str
    examined: int
    dual_outside_hol: int
    dual_normalized: int
    exactly_one_holds: bool


def _dual_setting(G: FiniteGroup, N: FiniteGroup) -> list[RegularSubgroup]:
    A, p = almost_simple_data(G)
    if G.order != N.order:
        raise PreconditionError("G and N must have the same order", g=G.order, n=N.order)

    structure = classify_group(N)
    contains_socle = are_isomorphic(G, N) is not None or (
        structure.kind in (StructureKind.DIRECT_PRODUCT, StructureKind.ALMOST_SIMPLE)
        and are_isomorphic(structure.socle.group, A.group) is not None)
    if not contains_socle:
        raise PreconditionError("N must contain a normal copy of the socle of G", n=N.name)

    samples = regular_subgroups_in_holomorph(G, N, collect=True).samples
    generators = lambda_generators(G)
    lam, rho = regular_lambda(G), regular_rho(G)
    return [D for D in samples if D != lam and D != rho and normalized_by(D, generators)]


def e_holomorph_dual(G: FiniteGroup, N: FiniteGroup) -> CountResult:
    """
    e(G, N) = 2 #{Hol(G) 의 lambda(G) 가 아닌 정칙 부분군 중 N 과 동형이고 lambda(G) 로 정규화되는 것}
    """
    with _stopwatch() as clock:
        inner = _dual_setting(G, N)
        rho_counted = 1 if are_isomorphic(G, N) is not None else 0
        value = 2 * (len(inner) + rho_counted)

    return CountResult(g_label=G.name, n_label=N.name, value=value, method=CountMethod.HOLOMORPH_DUAL,
                       runtime_ms=clock["ms"], notes=[f"normalized regular subgroups besides lambda, rho = {len(inner)}"])


def reverse_duality_profile(G: FiniteGroup, N: FiniteGroup) -> DualityProfile:
    """
    Hol(G) 안의 lambda(G) 로 정규화되는 정칙 부분군 D 마다 D* 가 Hol(G) 밖에 있는지 확인
    """
    inner = _dual_setting(G, N)
    hol = build_holomorph(G)
    generators = lambda_generators(G)
    outside = normalized = 0
    for D in inner:
        dual = dual_regular_subgroup(D)
        outside += 0 if hol.contains_all(dual.perms) else 1
        normalized += 1 if normalized_by(dual, generators) else 0

    return DualityProfile(g_label=G.name, n_label=N.name, examined=len(inner), dual_outside_hol=outside,
                          dual_normalized=normalized, exactly_one_holds=outside == len(inner))


# ========== 계산 경로 선택 ==========
def count_by_method(G: FiniteGroup, N: FiniteGroup, method: str, checkpoint: str | Path | None = None,
                    resume: str | Path | None = None, allow_12: bool = False,
                    types: Sequence[FiniteGroup] = ()) -> CountResult:
    """
    CLI/HTTP 의 method 이름 (formula | byott | brute | fpf | dual) 으로 계산 경로를 고르는 기능
    """
    if method == "formula":
        if are_isomorphic(G, N) is not None:
            return e_formula_theorem_old(G)
        structure = classify_group(N)
        A, p = almost_simple_data(G)
        if structure.kind == StructureKind.DIRECT_PRODUCT and structure.index == p \
                and are_isomorphic(structure.socle.group, A.group) is not None:
            return e_formula_theorem1(G, n_label=N.name)
        raise PreconditionError("no closed formula for this pair", g=G.name, n=N.name)

    if method == "byott":
        return e_byott(G, N, checkpoint=checkpoint, resume=resume)

    if method == "fpf":
        return e_fpf_inhol(G, N)

    if method == "dual":
        return e_holomorph_dual(G, N)

    if method == "brute":
        if G.order != N.order:
            raise PreconditionError("G and N must have the same order", g=G.order, n=N.order)
        with _stopwatch() as clock:
            census = e_brute_perm(G, allow_12=allow_12, types=types)
            value = census.count_for(N)
        return CountResult(g_label=G.name, n_label=N.name, value=value, method=CountMethod.BRUTE_PERM,
                           runtime_ms=clock["ms"], notes=[f"{label}: {count}" for label, count in census.counts.items()])

    raise PreconditionError(f"unknown counting method {method}")


__all__ = [
    "CountMethod", "CountResult", "e_formula_theorem_old", "e_formula_theorem1", "e_formula_sn",
    "symmetric_group", "e_byott", "e_fpf_inhol", "BruteCensus", "semiregular_permutations",
    "e_brute_perm", "DualityProfile", "e_holomorph_dual", "reverse_duality_profile", "count_by_method",
]
