"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Verification Suite Part
"""

# Libraries
from __future__ import annotations

from pathlib import Path
from typing import Callable

import time

from pydantic import BaseModel, Field, computed_field

from Catalog.catalog import SMALL_GROUPS, catalog_aut6_tower, resolve_spec
from Engine.group_core import FiniteGroup, normal_subgroups
from Engine.hgs_count import (e_brute_perm, e_byott, e_formula_sn, e_formula_theorem1, e_formula_theorem_old,
                              e_fpf_inhol, e_holomorph_dual)
from Engine.holomorph_engine import (crossed_homomorphisms, check_h_properties, dual_regular_subgroup,
                                     holomorph_is_normalizer, induce_on_quotient, normalized_by_exactly_one,
                                     regular_subgroups_in_holomorph)
from Engine.morphisms import automorphism_group, enumerate_homomorphisms
from Engine.structure_screen import (Verdict, almost_simple_data, every_automorphism_has_fixed_point,
                                     inner_is_unique_copy, out_is_solvable, screen_candidate,
                                     verify_condition3_witness)
from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_Verify")

SUITES = ("small", "paper-120", "paper-720", "lemmas", "stretch-720")


# ========== 보고서 모델 ==========
class VerifyItem(BaseModel):
    name: str
    expected: str
    observed: str
    passed: bool
    runtime_ms: float = 0.0


class VerifyReport(BaseModel):
    suite: str
    items: list[VerifyItem] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> int:
        return sum(1 for item in self.items if item.passed)

    @computed_field
    @property
    def failed(self) -> int:
        return sum(1 for item in self.items if not item.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _check(report: VerifyReport, name: str, expected, compute: Callable[[], object]) -> None:
    """
    한 항목을 계산해 기대값과 비교하고 보고서에 추가 (HGSError 는 실패 항목으로 기록)
    """
    started = time.perf_counter()
    try:
        if callable(expected):
            expected = expected()
        observed = compute()
        passed = observed == expected
        observed_text = str(observed)
    except HGSError as error:
        passed = False
        observed_text = f"{error.kind}: {error.message}"

    runtime_ms = (time.perf_counter() - started) * 1000.0
    report.items.append(VerifyItem(name=name, expected=str(expected), observed=observed_text,
                                   passed=passed, runtime_ms=runtime_ms))
    if passed:
        logger.info(f"[{report.suite}] PASS {name}")
    else:
        logger.warning(f"[{report.suite}] FAIL {name}: expected {expected}, observed {observed_text}")


def _groups_by_order() -> dict[int, list[FiniteGroup]]:
    grouped: dict[int, list[FiniteGroup]] = {}
    for label in SMALL_GROUPS:
        group = resolve_spec(label)
        grouped.setdefault(group.order, []).append(group)
    return grouped


# ========== small ==========
def _suite_small(report: VerifyReport) -> None:
    for order, groups in sorted(_groups_by_order().items()):
        for G in groups:
            census = e_brute_perm(G, types=groups)
            for N in groups:
                _check(report, f"e({G.name}, {N.name}) brute = byott", lambda: e_byott(G, N).value,
                       lambda: census.count_for(N))

            def duals_pair_up() -> bool:
                keys = {D.key: D for D in census.subgroups}
                for D in census.subgroups:
                    dual = dual_regular_subgroup(D)
                    partner = keys.get(dual.key)
                    if partner is None or partner.iso_type != D.iso_type:
                        return False
                return True

            _check(report, f"Perm({G.name}) subgroups come in dual pairs of one type", True, duals_pair_up)

    C4, V4 = resolve_spec("C4"), resolve_spec("V4")
    _check(report, "brute census of C4", {"C4": 1, "V4": 1}, lambda: e_brute_perm(C4, types=[C4, V4]).counts)
    _check(report, "brute census of V4", {"V4": 1, "C4": 3}, lambda: e_brute_perm(V4, types=[C4, V4]).counts)


# ========== paper-120 ==========
def _suite_order_120(report: VerifyReport) -> None:
    S5, N = resolve_spec("S5"), resolve_spec("AxCp(A5,2)")

    _check(report, "e(S5, S5) almost-simple formula", 32, lambda: e_formula_theorem_old(S5).value)
    _check(report, "e(S5, S5) symmetric formula", 32, lambda: e_formula_sn(5, "Sn").value)
    _check(report, "e(S5, S5) Byott enumeration", 32, lambda: e_byott(S5, S5).value)
    _check(report, "e(S5, S5) holomorph dual", 32, lambda: e_holomorph_dual(S5, S5).value)

    _check(report, "e(S5, A5xC2) split formula", 20, lambda: e_formula_theorem1(S5).value)
    _check(report, "e(S5, A5xC2) symmetric formula", 20, lambda: e_formula_sn(5, "AnxC2").value)
    _check(report, "e(S5, A5xC2) Byott enumeration", 20, lambda: e_byott(S5, N).value)
    _check(report, "e(S5, A5xC2) fixed-point-free pairs", 20, lambda: e_fpf_inhol(S5, N).value)
    _check(report, "e(S5, A5xC2) holomorph dual", 20, lambda: e_holomorph_dual(S5, N).value)


# ========== paper-720 ==========
def _suite_order_720(report: VerifyReport) -> None:
    PGL, M10 = resolve_spec("PGL(2,9)"), resolve_spec("M10")

    _check(report, "e(PGL(2,9), PGL(2,9)) almost-simple formula", 92, lambda: e_formula_theorem_old(PGL).value)
    _check(report, "e(M10, M10) almost-simple formula", 92, lambda: e_formula_theorem_old(M10).value)
    _check(report, "e(PGL(2,9), A6xC2) split formula", 72, lambda: e_formula_theorem1(PGL).value)
    _check(report, "e(M10, A6xC2) split formula", 0, lambda: e_formula_theorem1(M10).value)

    def condition3_witness() -> str:
        SL = resolve_spec("SL(2,9)")
        screened = screen_candidate(PGL, SL)
        _, p = almost_simple_data(PGL)
        verified = verify_condition3_witness(SL, screened.cond3_pairs, p)
        return f"{screened.cond3.verdict.value}/{'verified' if verified else 'unverified'}"

    _check(report, "SL(2,9) fails condition (3) for PGL(2,9)", f"{Verdict.FAILS.value}/verified", condition3_witness)

    C720 = resolve_spec("C720")
    _check(report, "C720 excluded for PGL(2,9)", True, lambda: screen_candidate(PGL, C720).excluded)
    _check(report, "C720 excluded for M10", True, lambda: screen_candidate(M10, C720).excluded)

    def tower_labels() -> tuple:
        tower = catalog_aut6_tower()
        return tuple(sorted(tower.outer_statistics)), tower.outer_statistics["M10"].get(2, 0)

    _check(report, "Aut(A6) tower labels and involution-free M10 coset", (("M10", "PGL(2,9)", "S6"), 0), tower_labels)


# ========== lemmas ==========
def _crossed_properties(G: FiniteGroup, N: FiniteGroup) -> bool:
    """
    모든 교차 준동형사상 (전단사 아닌 것 포함) 에 대해 쌍 검사, h 성질 a-d, 특성 부분군 역상 검사
    """
    aut = automorphism_group(N)
    characteristic = [entry for entry in normal_subgroups(N) if entry.characteristic]
    for f in enumerate_homomorphisms(G, aut.carrier):
        for c in crossed_homomorphisms(f, aut, bijective_only=False, full_check=True):
            if not all(check_h_properties(c).values()):
                return False
            for Lambda in characteristic:
                _, preimage = induce_on_quotient(c, Lambda)
                if c.bijective and preimage.order != Lambda.subgroup.order:
                    return False
    return True


def _suite_lemmas(report: VerifyReport) -> None:
    grouped = _groups_by_order()
    for order in (4, 6):
        for G in grouped[order]:
            for N in grouped[order]:
                _check(report, f"crossed homomorphisms {G.name} -> {N.name} satisfy the pair and h properties",
                       True, lambda: _crossed_properties(G, N))

    for label in ("C2", "C3", "C4", "V4", "C5", "C6", "S3"):
        G = resolve_spec(label)
        _check(report, f"Norm(lambda) = Hol = Norm(rho) for {label}", True, lambda: holomorph_is_normalizer(G))

    for order, groups in sorted(grouped.items()):
        for G in groups:
            def duality_facts() -> bool:
                for D in e_brute_perm(G).subgroups:
                    dual = dual_regular_subgroup(D)
                    if dual_regular_subgroup(dual) != D:
                        return False
                    if D.is_abelian() != (dual == D):
                        return False
                return True

            _check(report, f"double dual and abelian self-duality in Perm({G.name})", True, duality_facts)

    S5, N = resolve_spec("S5"), resolve_spec("AxCp(A5,2)")

    def exactly_one() -> bool:
        samples = regular_subgroups_in_holomorph(N, S5, collect=True).samples
        return bool(samples) and all(normalized_by_exactly_one(D, N) for D in samples)

    _check(report, "S5-type regular subgroups of Hol(A5xC2) normalized by exactly one of lambda, rho",
           True, exactly_one)

    def socle_preserved() -> bool:
        A, _ = almost_simple_data(S5)
        aut = automorphism_group(N)
        Lambda = next(entry for entry in normal_subgroups(N) if entry.subgroup.order == 60)
        seen = 0
        for f in enumerate_homomorphisms(S5, aut.carrier):
            for c in crossed_homomorphisms(f, aut, bijective_only=True):
                _, preimage = induce_on_quotient(c, Lambda)
                if preimage != A:
                    return False
                seen += 1
        return seen > 0

    _check(report, "bijective crossed homomorphisms S5 -> A5xC2 map A5 onto A5", True, socle_preserved)

    for label in ("A5", "A6"):
        A = resolve_spec(label)
        _check(report, f"every automorphism of {label} has a nontrivial fixed point", True,
               lambda: every_automorphism_has_fixed_point(A))
        _check(report, f"Inn({label}) is the only copy of {label} in Aut({label})", True,
               lambda: inner_is_unique_copy(A))
        _check(report, f"Out({label}) is solvable", True, lambda: out_is_solvable(A))


# ========== stretch-720 ==========
def _suite_stretch_720(report: VerifyReport, checkpoint_dir: str | Path | None) -> None:
    PGL, M10, S6 = resolve_spec("PGL(2,9)"), resolve_spec("M10"), resolve_spec("S6")
    directory = Path(checkpoint_dir) if checkpoint_dir is not None else None
    if directory is not None:
        directory.mkdir(parents=True, exist_ok=True)

    def byott(G: FiniteGroup, N: FiniteGroup) -> int:
        checkpoint = directory / f"{G.digest[:12]}-{N.digest[:12]}.ckpt" if directory is not None else None
        resume = checkpoint if checkpoint is not None and checkpoint.exists() else None
        return e_byott(G, N, checkpoint=checkpoint, resume=resume).value

    for G, N, expected in ((PGL, M10, 60), (M10, PGL, 60), (M10, S6, 72), (PGL, S6, 0),
                           (S6, M10, 72), (S6, PGL, 0)):
        _check(report, f"e({G.name}, {N.name}) Byott enumeration", expected, lambda: byott(G, N))


# ========== 실행 ==========
def run_verify_suite(name: str, allow_stretch: bool | None = None,
                     checkpoint_dir: str | Path | None = None) -> VerifyReport:
    """
    이름 있는 검증 묶음을 실행하고 항목별 기대값과 관측값을 모은 보고서를 만드는 기능
    :param name: small | paper-120 | paper-720 | lemmas | stretch-720
    :param allow_stretch: stretch-720 허용 여부 (기본값: HGS_ALLOW_STRETCH)
    :param checkpoint_dir: stretch-720 의 checkpoint 파일 위치
    :return: VerifyReport
    """
    if name not in SUITES:
        raise PreconditionError(f"unknown verify suite {name}", suite=name)

    report = VerifyReport(suite=name)
    logger.info(f"Running verify suite {name}")

    if name == "small":
        _suite_small(report)
    elif name == "paper-120":
        _suite_order_120(report)
    elif name == "paper-720":
        _suite_order_720(report)
    elif name == "lemmas":
        _suite_lemmas(report)
    else:
        allowed = load_settings().allow_stretch if allow_stretch is None else allow_stretch
        if not allowed:
            raise PreconditionError("stretch-720 runs for hours; set HGS_ALLOW_STRETCH=1 to enable it")
        _suite_stretch_720(report, checkpoint_dir)

    logger.info(f"Suite {name}: {report.passed} passed, {report.failed} failed")
    return report


__all__ = ["SUITES", "VerifyItem", "VerifyReport", "run_verify_suite"]
