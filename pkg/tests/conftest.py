import pytest

from crosstwist import Rationals, builtin_corpus


@pytest.fixture(scope="session")
def field():
    return Rationals()


@pytest.fixture(scope="session")
def corpus(field):
    return builtin_corpus(field)


@pytest.fixture(scope="session")
def by_name(corpus):
    return {inst.name: inst for inst in corpus}
