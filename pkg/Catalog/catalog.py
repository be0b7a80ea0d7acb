"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Group Catalog Part
"""

# Libraries
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache, reduce
from math import factorial
from pathlib import Path

import hashlib
import re

from Catalog.group_files import load_group_text
from Catalog.linear_groups import (MAX_Q, projective_general_linear_group, projective_special_linear_group,
                                   quaternion_group, special_linear_group)
from Engine.group_core import (FiniteGroup, Perm, Subgroup, are_isomorphic, cyclic_group, direct_product,
                               group_from_permutations, is_prime, trivial_group)
from Engine.hgs_count import symmetric_group
from Engine.morphisms import automorphism_group, index_subgroups_by_kernels
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_Catalog")

# 이름 있는 군의 원소 위수 분포 (자체 검사용)
EXPECTED_CENSUS: dict[str, dict[int, int]] = {
    "C4": {1: 1, 2: 1, 4: 2},
    "V4": {1: 1, 2: 3},
    "C6": {1: 1, 2: 1, 3: 2, 6: 2},
    "S3": {1: 1, 2: 3, 3: 2},
    "C8": {1: 1, 2: 1, 4: 2, 8: 4},
    "C4xC2": {1: 1, 2: 3, 4: 4},
    "C2^3": {1: 1, 2: 7},
    "D4": {1: 1, 2: 5, 4: 2},
    "Q8": {1: 1, 2: 1, 4: 6},
    "A5": {1: 1, 2: 15, 3: 20, 5: 24},
    "S5": {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20},
    "A5xC2": {1: 1, 2: 31, 3: 20, 5: 24, 6: 20, 10: 24},
    "PSL(2,5)": {1: 1, 2: 15, 3: 20, 5: 24},
    "PGL(2,5)": {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20},
    "SL(2,5)": {1: 1, 2: 1, 3: 20, 4: 30, 5: 24, 6: 20, 10: 24},
    "PSL(2,7)": {1: 1, 2: 21, 3: 56, 4: 42, 7: 48},
    "A6": {1: 1, 2: 45, 3: 80, 4: 90, 5: 144},
    "PSL(2,9)": {1: 1, 2: 45, 3: 80, 4: 90, 5: 144},
    "S6": {1: 1, 2: 75, 3: 80, 4: 180, 5: 144, 6: 240},
    "PGL(2,9)": {1: 1, 2: 81, 3: 80, 4: 90, 5: 144, 8: 180, 10: 144},
    "M10": {1: 1, 2: 45, 3: 80, 4: 270, 5: 144, 8: 180},
    "SL(2,9)": {1: 1, 2: 1, 3: 80, 4: 90, 5: 144, 6: 80, 8: 180, 10: 144},
    "A6xC2": {1: 1, 2: 91, 3: 80, 4: 180, 5: 144, 6: 80, 10: 144},
}

# 작은 위수 비교표에 쓰는 군
SMALL_GROUPS: tuple[str, ...] = ("C4", "V4", "C6", "S3", "C8", "C4*C2", "C2^3", "D4", "Q8")

CATALOG_ENTRIES: tuple[tuple[str, str], ...] = (
    ("Cn", "cyclic group of order n"),
    ("Dn", "dihedral group of order 2n (n >= 3), acting on n points"),
    ("Sn", "symmetric group on n points"),
    ("An", "alternating group on n points"),
    ("Q8", "quaternion group, inside SL(2,3)"),
    ("V4", "Klein four-group C2 x C2"),
    ("SL(2,q)", f"special linear group over GF(q), q <= {MAX_Q}, as 2x2 matrices"),
    ("PSL(2,q)", f"projective special linear group on the q+1 projective points, q <= {MAX_Q}"),
    ("PGL(2,q)", f"projective general linear group on the q+1 projective points, q <= {MAX_Q}"),
    ("M10", "index-2 subgroup of Aut(A6) whose outer coset has no involutions"),
    ("2A6", "double cover of A6, built as SL(2,9)"),
    ("Aut(A6)", "automorphism group of A6 (order 1440)"),
    ("Inn(A6)", "inner automorphisms of A6"),
    ("AxCp(A,p)", "direct product of the group A with a cyclic group of prime order p"),
    ("A*B", "direct product of two groups"),
    ("A^k", "k-fold direct power"),
    ("file:path", "group file ('perm <degree>' generators or 'table <n>' rows)"),
)

_FAMILY = re.compile(r"([CDSA])(\d+)")
_LINEAR = re.compile(r"(SL|PSL|PGL)\(2,(\d+)\)")
_AXCP = re.compile(r"AxCp\((.+),(\d+)\)")
_POWER = re.compile(r"(.+)\^(\d+)")

_resolved: dict[str, FiniteGroup] = {}


# ========== 군 표기 해석 ==========
def _split_top(text: str, separator: str) -> list[str]:
    # 괄호 밖의 separator 로만 나눔
    parts, depth, current = [], 0, []
    for char in text:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise UnknownGroupError(f"unbalanced parentheses in {text!r}")
        if char == separator and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise UnknownGroupError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return parts


def spec_digest(spec: str) -> str:
    """
    군 표기의 캐시 key, 파일은 내용까지 포함
    """
    text = "".join(spec.split())
    payload = text.encode("utf-8")
    if text.startswith("file:"):
        path = Path(text[len("file:"):])
        try:
            payload += b"\0" + path.read_bytes()
        except FileNotFoundError:
            raise UnknownGroupError(f"group file {path} does not exist", path=path)
    return hashlib.sha256(payload).hexdigest()


def resolve_spec(spec: str) -> FiniteGroup:
    """
    군 표기를 FiniteGroup 으로 바꾸는 기능 (같은 표기는 캐시된 군을 돌려줌)
    :param spec: "S5", "PGL(2,9)", "AxCp(A6,2)", "C4*C2", "file:path" 등
    :return: 자체 검사를 통과한 FiniteGroup
    """
    text = "".join(spec.split())
    if not text:
        raise UnknownGroupError("empty group spec")

    digest = spec_digest(text)
    if digest in _resolved:
        return _resolved[digest]

    group, expected_order = _build(text)
    self_check(group, expected_order)
    _resolved[digest] = group
    logger.info(f"Resolved {text} -> {group.name} (order {group.order})")
    return group


def _build(text: str) -> tuple[FiniteGroup, int | None]:
    if text.startswith("file:"):
        path = Path(text[len("file:"):])
        group = load_group_text(path.read_text(encoding="utf-8"), name=path.stem)
        return group, None

    factors = _split_top(text, "*")
    if len(factors) > 1:
        groups = [resolve_spec(factor) for factor in factors]
        product = reduce(lambda A, B: direct_product(A, B), groups)
        product.name = "x".join(g.name for g in groups)
        return product, None

    match = _AXCP.fullmatch(text)
    if match:
        p = int(match.group(2))
        if not is_prime(p):
            raise PreconditionError(f"AxCp needs a prime p, got {p}", p=p)
        A = resolve_spec(match.group(1))
        return direct_product(A, cyclic_group(p), name=f"{A.name}xC{p}"), A.order * p

    match = _POWER.fullmatch(text)
    if match:
        base, k = resolve_spec(match.group(1)), int(match.group(2))
        if k < 1:
            raise UnknownGroupError(f"power must be positive in {text!r}")
        group = reduce(lambda A, B: direct_product(A, B), [base] * k)
        group.name = f"{base.name}^{k}" if k > 1 else base.name
        return group, base.order ** k

    match = _FAMILY.fullmatch(text)
    if match:
        return _family(match.group(1), int(match.group(2)))

    match = _LINEAR.fullmatch(text)
    if match:
        kind, q = match.group(1), int(match.group(2))
        if kind == "SL":
            return special_linear_group(q), q * (q * q - 1)
        if kind == "PSL":
            return projective_special_linear_group(q), q * (q * q - 1) // (1 if q % 2 == 0 else 2)
        return projective_general_linear_group(q), q * (q * q - 1)

    named = {
        "Q8": lambda: (quaternion_group(), 8),
        "V4": lambda: (direct_product(cyclic_group(2), cyclic_group(2), name="V4"), 4),
        "M10": lambda: (catalog_aut6_tower().groups["M10"], 720),
        "2A6": lambda: (special_linear_group(9), 720),
        "Aut(A6)": lambda: (catalog_aut6_tower().groups["Aut(A6)"], 1440),
        "Inn(A6)": lambda: (catalog_aut6_tower().groups["Inn(A6)"], 360),
    }
    if text in named:
        return named[text]()

    raise UnknownGroupError(f"unknown group spec {text!r}", spec=text)


def _family(letter: str, n: int) -> tuple[FiniteGroup, int]:
    if n < 1:
        raise UnknownGroupError(f"{letter}{n} is not a valid group")

    if letter == "C":
        return cyclic_group(n), n

    if letter == "D":
        if n < 3:
            raise UnknownGroupError(f"D{n} is not supported; use n >= 3")
        rotation = Perm(tuple((i + 1) % n for i in range(n)))
        reflection = Perm(tuple((-i) % n for i in range(n)))
        return group_from_permutations([rotation, reflection], name=f"D{n}"), 2 * n

    if letter == "S":
        if n == 1:
            return trivial_group(), 1
        return symmetric_group(n), factorial(n)

    if n <= 2:
        group = trivial_group()
        group.name = f"A{n}"
        return group, 1
    three_cycle = Perm.from_cycles("(0 1 2)", n)
    if n % 2:
        long_cycle = Perm(tuple((i + 1) % n for i in range(n)))
    else:
        long_cycle = Perm((0,) + tuple(1 + i % (n - 1) for i in range(1, n)))
    return group_from_permutations([three_cycle, long_cycle], name=f"A{n}"), factorial(n) // 2


def self_check(group: FiniteGroup, expected_order: int | None = None) -> None:
    """
    이름 있는 군의 위수와 원소 위수 분포를 기대값과 비교하는 기능
    """
    if expected_order is not None and group.order != expected_order:
        logger.error(f"{group.name} has order {group.order}, expected {expected_order}")
        raise EngineInvariantError(f"{group.name} has order {group.order}", expected=expected_order)

    expected = EXPECTED_CENSUS.get(group.name)
    if expected is not None and group.order_statistics() != expected:
        logger.error(f"{group.name} order census {group.order_statistics()} differs from {expected}")
        raise EngineInvariantError(f"{group.name} fails its order-census self-check", census=group.order_statistics())


def catalog_list() -> list[dict]:
    return [{"label": label, "description": description} for label, description in CATALOG_ENTRIES]


def clear_cache() -> None:
    _resolved.clear()


# ========== Aut(A6) 탑 ==========
@dataclass
class AutTower:
    """
    Aut(A6) 와 Inn(A6) 를 포함하는 지표 2 부분군 세 개
    subgroups 는 Aut(A6) 의 carrier 안에서의 부분군, groups 는 재번호한 독립 군
    """
    groups: dict[str, FiniteGroup]
    subgroups: dict[str, Subgroup]
    outer_statistics: dict[str, dict[int, int]] = field(default_factory=dict)


def _label_overgroup(statistics: dict[int, int]) -> str:
    if statistics.get(2, 0) == 0:
        return "M10"
    if statistics.get(6, 0) > 0:
        return "S6"
    return "PGL(2,9)"


@cache
def catalog_aut6_tower() -> AutTower:
    """
    Aut(A6) 안의 Inn(A6) 를 포함하는 지표 2 부분군을 찾아 바깥 잉여류의 원소 위수로 이름을 붙이는 기능
    - 바깥 잉여류에 involution 이 없으면 M10
    - 바깥 잉여류에 위수 6 원소가 있으면 S6
    - 나머지는 PGL(2,9)
    S6 와 PGL(2,9) 는 독립적으로 만든 군과 동형인지 다시 확인함
    :return: AutTower
    """
    A6 = resolve_spec("A6")
    aut = automorphism_group(A6)
    if aut.order != 1440:
        raise EngineInvariantError(f"|Aut(A6)| = {aut.order}, expected 1440")

    carrier = aut.carrier
    groups: dict[str, FiniteGroup] = {
        "Aut(A6)": FiniteGroup(carrier.mul, name="Aut(A6)", check=False),
        "Inn(A6)": FiniteGroup(aut.inner.group.mul, name="Inn(A6)", check=False),
    }
    subgroups: dict[str, Subgroup] = {"Aut(A6)": Subgroup(carrier, list(range(carrier.order))), "Inn(A6)": aut.inner}
    outer_statistics: dict[str, dict[int, int]] = {}

    overgroups = [K for K in index_subgroups_by_kernels(carrier, 2) if aut.inner.mask[K.members].sum() == aut.inner.order]
    if len(overgroups) != 3:
        raise EngineInvariantError(f"found {len(overgroups)} index-2 overgroups of Inn(A6), expected 3")

    for K in overgroups:
        outer = K.members[~aut.inner.mask[K.members]]
        statistics = carrier.order_statistics(outer)
        label = _label_overgroup(statistics)
        if label in groups:
            raise EngineInvariantError(f"two overgroups of Inn(A6) received the label {label}")
        groups[label] = FiniteGroup(K.group.mul, name=label, check=False)
        subgroups[label] = K
        outer_statistics[label] = statistics

    independent = {"S6": symmetric_group(6), "PGL(2,9)": projective_general_linear_group(9)}
    for label, reference in independent.items():
        if are_isomorphic(groups[label], reference) is None:
            logger.error(f"Tower label {label} does not match the independent construction")
            raise EngineInvariantError(f"tower label {label} fails its isomorphism cross-check")
    for reference in independent.values():
        if are_isomorphic(groups["M10"], reference) is not None:
            raise EngineInvariantError(f"M10 is isomorphic to {reference.name}")

    logger.info(f"Aut(A6) tower labelled: {sorted(outer_statistics)}")
    return AutTower(groups=groups, subgroups=subgroups, outer_statistics=outer_statistics)


__all__ = [
    "EXPECTED_CENSUS", "SMALL_GROUPS", "CATALOG_ENTRIES", "spec_digest", "resolve_spec", "self_check",
    "catalog_list", "clear_cache", "AutTower", "catalog_aut6_tower",
]
