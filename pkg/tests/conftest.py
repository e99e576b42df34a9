import pytest

from ontowind import build_lexicon, load_seed


@pytest.fixture(scope="session")
def seed():
    return load_seed()


@pytest.fixture(scope="session")
def seed_lexicon_en(seed):
    return build_lexicon(seed, ("EN",))


@pytest.fixture(scope="session")
def seed_lexicon_all(seed):
    return build_lexicon(seed, ("EN", "TR"))
