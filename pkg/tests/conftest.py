import pytest

from liebasis_lib.lie.rootdata import build_root_system


@pytest.fixture
def a1():
    return build_root_system("A", 1)


@pytest.fixture
def a2():
    return build_root_system("A", 2)


@pytest.fixture
def a3():
    return build_root_system("A", 3)


@pytest.fixture
def a4():
    return build_root_system("A", 4)


@pytest.fixture
def b2():
    return build_root_system("B", 2)


@pytest.fixture
def g2():
    return build_root_system("G", 2)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    # the library reads its caps from the environment on every call
    for name in ("ESSENTIAL_BUDGET", "LIEBASIS_THREADS", "LIEBASIS_CENSUS_MAX_RANK", "LIEBASIS_CENSUS_MAX_WORDS"):
        monkeypatch.delenv(name, raising=False)
