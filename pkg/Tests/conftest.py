"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Test Fixtures
"""

# Libraries
import os

# Database 모듈을 불러오기 전에 메모리 DB 로 고정
os.environ["HGS_DATABASE_URL"] = "sqlite:///:memory:"
os.environ.setdefault("HGS_JOBS", "1")

import pytest

from Catalog.catalog import SMALL_GROUPS, resolve_spec


def pytest_addoption(parser):
    parser.addoption("--run-stretch", action="store_true", default=False,
                     help="run the order-720 Byott enumerations (hours)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-stretch"):
        return
    skip_stretch = pytest.mark.skip(reason="needs --run-stretch")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip_stretch)


@pytest.fixture(scope="session")
def small_groups():
    return {label: resolve_spec(label) for label in SMALL_GROUPS}


@pytest.fixture(scope="session")
def s5():
    return resolve_spec("S5")


@pytest.fixture(scope="session")
def a5():
    return resolve_spec("A5")


@pytest.fixture(scope="session")
def a5xc2():
    return resolve_spec("AxCp(A5,2)")


@pytest.fixture(scope="session")
def pgl29():
    return resolve_spec("PGL(2,9)")


@pytest.fixture(scope="session")
def m10():
    return resolve_spec("M10")


@pytest.fixture
def group_file(tmp_path):
    def write(text: str, name: str = "sample.grp"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return write
