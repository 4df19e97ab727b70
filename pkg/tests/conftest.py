import pytest

from piord.params import SystemParams
from piord.oracle import enumerate_corpus


@pytest.fixture(scope="session")
def p3():
    return SystemParams(3)


@pytest.fixture(scope="session")
def p4():
    return SystemParams(4)


@pytest.fixture(scope="session")
def corpus3(p3):
    return enumerate_corpus(p3, 9)


@pytest.fixture(scope="session")
def corpus4(p4):
    return enumerate_corpus(p4, 9)
