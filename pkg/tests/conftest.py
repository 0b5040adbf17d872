import pytest

from corpus import build_corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
