import pytest

from fuzzydea.dataio import load_fixture


@pytest.fixture(scope="session")
def gt():
    return load_fixture("guo_tanaka")


@pytest.fixture(scope="session")
def ac():
    return load_fixture("aircraft")
