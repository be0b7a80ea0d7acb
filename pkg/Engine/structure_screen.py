"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Structure Screen Part
"""

# Libraries
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from Engine.group_core import (IDENTITY, FiniteGroup, Subgroup, are_isomorphic, center, centralizer,
                               is_perfect, is_prime, is_solvable, normal_subgroups, perfect_core,
                               quotient_group)
from Engine.morphisms import automorphism_group, index_subgroups_by_kernels
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_Screen")


# ========== 구조 분류 ==========
class StructureKind(str, Enum):
    ABELIAN = "abelian"
    SOLVABLE_OTHER = "solvable-other"
    SIMPLE = "simple"
    ALMOST_SIMPLE = "almost-simple"
    QUASISIMPLE = "quasisimple"
    DIRECT_PRODUCT = "direct-product-simple-cyclic"
    PERFECT_OTHER = "perfect-other"
    OTHER = "other"


@dataclass
class StructureClass:
    """
    군의 구조 판정과 그 근거가 되는 부분군들
    - almost-simple: socle (유일한 비자명 진정규부분군), index = [G : socle]
    - quasisimple: center, quotient = G/Z(G)
    - direct-product-simple-cyclic: socle = 단순 인자 A, factor = C_p, index = p
    """
    kind: StructureKind
    socle: Subgroup | None = None
    index: int | None = None
    center: Subgroup | None = None
    quotient: FiniteGroup | None = None
    factor: Subgroup | None = None
    witnesses: dict[str, Subgroup] = field(default_factory=dict)

    def describe(self) -> str:
        if self.kind == StructureKind.ALMOST_SIMPLE:
            return f"almost-simple(socle order {self.socle.order}, index {self.index})"
        if self.kind == StructureKind.QUASISIMPLE:
            return f"quasisimple(center order {self.center.order}, quotient order {self.quotient.order})"
        if self.kind == StructureKind.DIRECT_PRODUCT:
            return f"direct-product-simple-cyclic(simple order {self.socle.order}, p = {self.index})"
        return self.kind.value


def _proper_normals(G: FiniteGroup) -> list[Subgroup]:
    return [entry.subgroup for entry in normal_subgroups(G, characteristic=False)
            if not entry.subgroup.is_trivial() and not entry.subgroup.is_whole()]


def is_simple(G: FiniteGroup) -> bool:
    return G.order > 1 and not _proper_normals(G)


def is_nonabelian_simple(G: FiniteGroup) -> bool:
    return not G.is_abelian and is_simple(G)


def classify_group(G: FiniteGroup) -> StructureClass:
    """
    정규부분군 격자로부터 군의 구조 유형을 판정하는 기능
    :param G: 군
    :return: StructureClass
    """
    if "structure" in G.cache:
        return G.cache["structure"]

    result = _classify(G)
    G.cache["structure"] = result
    logger.info(f"{G.name} classified as {result.describe()}")
    return result


def _classify(G: FiniteGroup) -> StructureClass:
    if G.is_abelian:
        return StructureClass(StructureKind.ABELIAN)

    proper = _proper_normals(G)
    Z = center(G)

    if is_perfect(G):
        if not proper:
            return StructureClass(StructureKind.SIMPLE)
        if not Z.is_trivial():
            Q, _ = quotient_group(G, Z)
            if is_nonabelian_simple(Q):
                return StructureClass(StructureKind.QUASISIMPLE, center=Z, quotient=Q, witnesses={"center": Z})
        return StructureClass(StructureKind.PERFECT_OTHER)

    if is_solvable(G):
        return StructureClass(StructureKind.SOLVABLE_OTHER)

    # 유일한 비자명 진정규부분군이 비아벨 단순군이고 지표가 소수
    if len(proper) == 1:
        A = proper[0]
        if is_prime(A.index) and is_nonabelian_simple(A.group) and centralizer_of_subgroup(G, A).is_trivial():
            return StructureClass(StructureKind.ALMOST_SIMPLE, socle=A, index=A.index, center=Z,
                                  witnesses={"socle": A})

    # 비자명 진정규부분군이 정확히 A 와 C_p 둘
    if len(proper) == 2:
        small, large = sorted(proper, key=lambda S: S.order)
        if (is_prime(small.order) and small.order * large.order == G.order
                and np.intersect1d(small.members, large.members).size == 1
                and is_nonabelian_simple(large.group)):
            return StructureClass(StructureKind.DIRECT_PRODUCT, socle=large, index=small.order, center=Z,
                                  factor=small, witnesses={"simple": large, "cyclic": small})

    return StructureClass(StructureKind.OTHER)


def centralizer_of_subgroup(G: FiniteGroup, A: Subgroup) -> Subgroup:
    mask = np.ones(G.order, dtype=bool)
    for a in A.members:
        mask &= G.mul[a] == G.mul[:, a]
    return Subgroup(G, np.flatnonzero(mask))


def almost_simple_data(G: FiniteGroup) -> tuple[Subgroup, int]:
    """
    소수 지표 socle 을 가진 almost simple 군의 (A, p)
    """
    structure = classify_group(G)
    if structure.kind != StructureKind.ALMOST_SIMPLE:
        raise PreconditionError("G must be almost simple with a socle of prime index",
                                group=G.name, kind=structure.kind.value)
    return structure.socle, structure.index


# ========== 보고서 모델 ==========
class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


class ConditionResult(BaseModel):
    verdict: Verdict
    witness: list[int] = Field(default_factory=list)
    note: str = ""


class ScreeningReport(BaseModel):
    g_label: str
    n_label: str
    n_kind: str
    shape_verdict: Literal["allowed-shape", "allowed-shape-perfect", "excluded"]
    reason: str = ""
    certificate: dict[str, list[int]] = Field(default_factory=dict)
    cond1: ConditionResult = ConditionResult(verdict=Verdict.NOT_APPLICABLE)
    cond2: ConditionResult = ConditionResult(verdict=Verdict.NOT_APPLICABLE)
    cond3: ConditionResult = ConditionResult(verdict=Verdict.NOT_APPLICABLE)
    cond4: ConditionResult = ConditionResult(verdict=Verdict.NOT_APPLICABLE)
    cond3_pairs: list[tuple[int, int]] = Field(default_factory=list)
    centralizer_identity: bool | None = None

    @property
    def excluded(self) -> bool:
        return self.shape_verdict == "excluded"


# ========== 후보 N 선별 ==========
def screen_candidate(G: FiniteGroup, N: FiniteGroup) -> ScreeningReport:
    """
    e(G, N) 이 0 이 아니기 위한 필요조건으로 N 을 선별하는 기능
    N 이 완전군이 아니면 N = A x C_p 또는 socle 이 A 인 almost simple 이어야 하고,
    완전군이면 조건 (1)-(4) 를 모두 만족해야 함
    :param G: socle A 의 지표가 소수 p 인 almost simple 군
    :param N: |N| = |G| 인 후보
    :return: ScreeningReport
    """
    A, p = almost_simple_data(G)
    if N.order != G.order:
        raise PreconditionError("candidate order differs from |G|", g=G.order, n=N.order)

    structure = classify_group(N)
    report = dict(g_label=G.name, n_label=N.name, n_kind=structure.describe())

    if not is_perfect(N):
        allowed = _shape_allowed(structure, A, p)
        if allowed:
            return ScreeningReport(shape_verdict="allowed-shape", reason=allowed, **report)

        reason = f"{structure.describe()} is neither A x C_{p} nor almost simple with socle A"
        if is_solvable(N):
            reason += "; N is solvable while G is not"
        orders = sorted(entry.subgroup.order for entry in normal_subgroups(N, characteristic=False))
        logger.info(f"Screen excludes {N.name} for {G.name}: {reason}")
        return ScreeningReport(shape_verdict="excluded", reason=reason,
                               certificate={"normal_subgroup_orders": orders}, **report)

    cond1 = _condition_quasisimple(structure, A)
    cond2 = _condition_fixed_points(A, p)
    cond3, pairs = _condition_lifting(N, p)
    cond4, identity = _condition_commuting(G, N, A, p)

    failed = [name for name, result in (("1", cond1), ("2", cond2), ("3", cond3), ("4", cond4))
              if result.verdict == Verdict.FAILS]
    verdict = "excluded" if failed else "allowed-shape-perfect"
    reason = f"condition(s) {', '.join(failed)} fail" if failed else "all conditions hold"
    logger.info(f"Screen of perfect {N.name} for {G.name}: {reason}")

    return ScreeningReport(shape_verdict=verdict, reason=reason, cond1=cond1, cond2=cond2, cond3=cond3,
                           cond4=cond4, cond3_pairs=pairs, centralizer_identity=identity, **report)


def _shape_allowed(structure: StructureClass, A: Subgroup, p: int) -> str:
    if structure.kind == StructureKind.DIRECT_PRODUCT and structure.index == p \
            and are_isomorphic(structure.socle.group, A.group) is not None:
        return f"N is A x C_{p}"
    if structure.kind == StructureKind.ALMOST_SIMPLE and are_isomorphic(structure.socle.group, A.group) is not None:
        return "N is almost simple with socle A"
    return ""


def _condition_quasisimple(structure: StructureClass, A: Subgroup) -> ConditionResult:
    # (1) N 이 quasisimple 이고 N/Z(N) 가 A 와 동형
    if structure.kind != StructureKind.QUASISIMPLE:
        return ConditionResult(verdict=Verdict.FAILS, note=f"N is {structure.describe()}")
    if are_isomorphic(structure.quotient, A.group) is None:
        return ConditionResult(verdict=Verdict.FAILS, note="N/Z(N) is not isomorphic to A")
    return ConditionResult(verdict=Verdict.HOLDS, witness=[int(z) for z in structure.center.members],
                           note=f"|Z(N)| = {structure.center.order}")


def _condition_fixed_points(A: Subgroup, p: int) -> ConditionResult:
    # (2) A 의 자기동형사상 중 고정점이 정확히 p 개인 것
    aut = automorphism_group(A.group)
    counts = (aut.action == np.arange(A.order)).sum(axis=1)
    hits = np.flatnonzero(counts == p)
    if hits.size:
        return ConditionResult(verdict=Verdict.HOLDS, witness=[int(hits[0])],
                               note=f"automorphism {int(hits[0])} of A fixes {p} elements")
    return ConditionResult(verdict=Verdict.FAILS, note=f"no automorphism of A fixes exactly {p} elements")


def _condition_lifting(N: FiniteGroup, p: int) -> tuple[ConditionResult, list[tuple[int, int]]]:
    """
    (3) 위수 p 인 잉여류 zZ(N) 중, z 와 Z(N) 를 법으로 교환하는 모든 eta 가 실제로 z 와 교환하는 것이 있는지
    실패하면 잉여류마다 (z, eta) 반례를 돌려줌
    """
    Z = center(N)
    Q, projection = quotient_group(N, Z)
    _, representatives = np.unique(projection, return_index=True)

    pairs: list[tuple[int, int]] = []
    for q in np.flatnonzero(Q.elt_order == p):
        z = int(representatives[q])
        commute_mod = Q.mul[projection, q] == Q.mul[q, projection]
        commute = N.mul[:, z] == N.mul[z]
        broken = np.flatnonzero(commute_mod & ~commute)
        if broken.size == 0:
            return ConditionResult(verdict=Verdict.HOLDS, witness=[z]), []
        pairs.append((z, int(broken[0])))

    note = "no element of order p in N/Z(N)" if not pairs else f"{len(pairs)} cosets of order {p} all break"
    return ConditionResult(verdict=Verdict.FAILS, witness=[pair[0] for pair in pairs], note=note), pairs


def verify_condition3_witness(N: FiniteGroup, pairs: list[tuple[int, int]], p: int) -> bool:
    """
    조건 (3) 실패 증거의 독립 재검사
    모든 위수 p 잉여류가 쌍으로 덮이고, 각 쌍이 eta z = z eta (mod Z) 이면서 eta z != z eta 인지 확인
    """
    Z = center(N).mask
    covered: set[int] = set()
    Q, projection = quotient_group(N, center(N))
    for z, eta in pairs:
        left, right = int(N.mul[eta, z]), int(N.mul[z, eta])
        difference = int(N.mul[N.inv[right], left])
        if left == right or not Z[difference] or Q.elt_order[projection[z]] != p:
            return False
        covered.add(int(projection[z]))
    return covered == set(int(q) for q in np.flatnonzero(Q.elt_order == p))


def _condition_commuting(G: FiniteGroup, N: FiniteGroup, A: Subgroup, p: int) -> tuple[ConditionResult, bool | None]:
    """
    (4) Z(N) 가 Aut(N) 에 의해 점별로 고정될 때만 적용: 위수 p 인 zeta in A 와 교환하는 sigma in G - A 가 있는지
    centralizer identity |C_G(zeta)| = p |C_A(zeta)| 도 함께 보고함
    """
    Z = center(N).members
    aut = automorphism_group(N)
    if not (aut.action[:, Z] == Z[None, :]).all():
        return ConditionResult(verdict=Verdict.NOT_APPLICABLE, note="Z(N) is moved by Aut(N)"), None

    outside = ~A.mask
    identity = False
    witness: list[int] = []
    for zeta in A.members[G.elt_order[A.members] == p]:
        C = centralizer(G, int(zeta))
        outer = C.members[outside[C.members]]
        if outer.size and not witness:
            witness = [int(zeta), int(outer[0])]
        if C.order == p * int(A.mask[C.members].sum()):
            identity = True
        if witness and identity:
            break

    if witness:
        return ConditionResult(verdict=Verdict.HOLDS, witness=witness), identity
    return ConditionResult(verdict=Verdict.FAILS, note=f"no order-{p} element of A commutes with G - A"), identity


# ========== 가설 및 보조 사실 ==========
class HypothesisCheck(BaseModel):
    holds: bool
    aut_order: int
    index: int
    witnesses: list[str] = Field(default_factory=list)


def check_theorem_old_hypothesis(G: FiniteGroup) -> HypothesisCheck:
    """
    Aut(G) 안에서 G 와 동형인 부분군이 Inn(G) 뿐인지 판정하는 기능
    지표 q = |Aut(G)| / |G| 가 1 이거나 |Aut(G)| 의 가장 작은 소인수일 때만 판정 가능
    (이 경우 지표 q 부분군은 정규이므로 C_q 로의 전사의 핵으로 모두 얻어짐)
    :param G: 중심이 자명한 군
    :return: HypothesisCheck
    """
    if not center(G).is_trivial():
        raise PreconditionError("hypothesis check needs a centerless group", group=G.name)

    aut = automorphism_group(G)
    q = aut.order // G.order
    if q == 1:
        return HypothesisCheck(holds=True, aut_order=aut.order, index=1, witnesses=["Aut(G) = Inn(G)"])

    smallest = next(d for d in range(2, aut.order + 1) if aut.order % d == 0)
    if not is_prime(q) or q != smallest:
        raise InfeasibleError("subgroup search is only implemented for the smallest prime index",
                              group=G.name, index=q)

    witnesses: list[str] = []
    holds = True
    for K in index_subgroups_by_kernels(aut.carrier, q):
        if are_isomorphic(K.group, G) is None:
            continue
        is_inner = K == aut.inner
        witnesses.append(f"index-{q} subgroup isomorphic to G ({'inner' if is_inner else 'not inner'})")
        holds &= is_inner

    if not witnesses:
        logger.error(f"Inn({G.name}) was not found among the index-{q} subgroups")
        raise EngineInvariantError("Inn(G) missing from the index-q subgroup scan", group=G.name)
    return HypothesisCheck(holds=holds, aut_order=aut.order, index=q, witnesses=witnesses)


class SplitReport(BaseModel):
    splits: bool
    witness: int | None = None
    outer_order_p: int


def splits_over_socle(G: FiniteGroup) -> SplitReport:
    """
    G 가 socle A 위에서 분열하는지 (G - A 에 위수 p 원소가 있는지) 판정
    """
    A, p = almost_simple_data(G)
    outer = np.flatnonzero(~A.mask & (G.elt_order == p))
    return SplitReport(splits=bool(outer.size), witness=int(outer[0]) if outer.size else None,
                       outer_order_p=int(outer.size))


def every_automorphism_has_fixed_point(A: FiniteGroup) -> bool:
    # 모든 자기동형사상이 항등원 외의 고정점을 가짐
    aut = automorphism_group(A)
    counts = (aut.action == np.arange(A.order)).sum(axis=1)
    return bool((counts >= 2).all())


def inner_is_unique_copy(A: FiniteGroup) -> bool:
    """
    Aut(A) 의 완전 핵(perfect core) 이 Inn(A) 와 같으면 A 와 동형인 (완전) 부분군은 Inn(A) 뿐임
    """
    aut = automorphism_group(A)
    if not is_perfect(A) or not center(A).is_trivial():
        return False
    return perfect_core(aut.carrier) == aut.inner


def out_is_solvable(A: FiniteGroup) -> bool:
    aut = automorphism_group(A)
    Q, _ = quotient_group(aut.carrier, aut.inner)
    return is_solvable(Q)


__all__ = [
    "StructureKind", "StructureClass", "classify_group", "is_simple", "is_nonabelian_simple",
    "centralizer_of_subgroup", "almost_simple_data", "Verdict", "ConditionResult", "ScreeningReport",
    "screen_candidate", "verify_condition3_witness", "HypothesisCheck", "check_theorem_old_hypothesis",
    "SplitReport", "splits_over_socle", "every_automorphism_has_fixed_point", "inner_is_unique_copy",
    "out_is_solvable",
]
