import pytest
from hypothesis import settings

from qknot.braid import parse_braid
from qknot.cli import load_corpus

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_braids(corpus):
    return {e.name: parse_braid(e.word, strands=e.strands) for e in corpus}
