"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Group File Part
"""

# Libraries
from __future__ import annotations

from pathlib import Path

from Engine.group_core import (FiniteGroup, Perm, PermutationSource, TableSource, construct_group)
from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_Catalog")


def _content_lines(text: str) -> list[tuple[int, str]]:
    # 빈 줄과 '#' 주석은 건너뛰되 원래 줄 번호는 유지
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _header(lines: list[tuple[int, str]]) -> tuple[str, int]:
    if not lines:
        raise GroupParseError("empty group file", line=1)

    number, line = lines[0]
    tokens = line.split()
    if len(tokens) != 2 or tokens[0] not in ("perm", "table"):
        raise GroupParseError("first line must be 'perm <degree>' or 'table <n>'", line=number)
    try:
        size = int(tokens[1])
    except ValueError:
        raise GroupParseError(f"size {tokens[1]!r} is not an integer", line=number)
    if size < 1:
        raise GroupParseError("size must be positive", line=number)
    return tokens[0], size


def parse_group_text(text: str, name: str = "") -> PermutationSource | TableSource:
    """
    군 파일 내용을 군 원천으로 바꾸는 기능
    - perm <degree> 다음 줄부터 한 줄에 생성원 하나 (0-based 순환 표기)
    - table <n> 다음 n 줄에 곱셈표의 행
    :param text: 파일 내용
    :param name: 군 이름
    :return: PermutationSource 또는 TableSource
    """
    lines = _content_lines(text)
    kind, size = _header(lines)
    body = lines[1:]

    if kind == "perm":
        degree_cap = load_settings().max_perm_degree
        if size > degree_cap:
            raise GroupParseError(f"degree {size} exceeds {degree_cap}", line=lines[0][0])

        generators = []
        for number, line in body:
            try:
                generators.append(Perm.from_cycles(line, size))
            except (GroupParseError, TableError) as error:
                raise GroupParseError(error.message, line=number)
        return PermutationSource(degree=size, generators=tuple(generators), name=name)

    if len(body) != size:
        last = body[-1][0] if body else lines[0][0]
        raise GroupParseError(f"expected {size} table rows, found {len(body)}", line=last)

    rows = []
    for number, line in body:
        try:
            row = tuple(int(token) for token in line.split())
        except ValueError:
            raise GroupParseError("table rows must contain integers", line=number)
        if len(row) != size:
            raise GroupParseError(f"expected {size} entries, found {len(row)}", line=number)
        if any(value < 0 or value >= size for value in row):
            raise GroupParseError(f"entries must lie in 0..{size - 1}", line=number)
        rows.append(row)
    return TableSource(rows=tuple(rows), name=name)


def load_group_text(text: str, name: str = "") -> FiniteGroup:
    return construct_group(parse_group_text(text, name=name))


def load_group_file(path: str | Path) -> FiniteGroup:
    """
    군 파일을 읽어 검증된 FiniteGroup 을 만드는 기능
    :param path: 파일 경로
    :return: FiniteGroup (이름은 파일 이름)
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise UnknownGroupError(f"group file {path} does not exist", path=path)
    except (OSError, UnicodeDecodeError) as error:
        raise GroupParseError(f"cannot read group file {path}: {error}")

    group = load_group_text(text, name=path.stem)
    logger.info(f"Loaded {path.name}: order {group.order}")
    return group


__all__ = ["parse_group_text", "load_group_text", "load_group_file"]
