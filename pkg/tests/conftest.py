"""Session-wide frame corpora shared by the unit and acceptance tests."""

import pytest

from groupra import GroupRelationAlgebra, build_cyclic_frame

from tests.helpers import cyclic_corpus, multiblock_corpus, verdict_corpus


@pytest.fixture(scope="session")
def running_frame():
    """The Z6/Z9 pair with kappa = 3 used throughout the docs."""
    return build_cyclic_frame([6, 9], {(0, 1): 3})


@pytest.fixture(scope="session")
def running_algebra(running_frame):
    return GroupRelationAlgebra(running_frame)


@pytest.fixture(scope="session")
def corpus():
    return cyclic_corpus()


@pytest.fixture(scope="session")
def corpus_algebras(corpus):
    return [GroupRelationAlgebra(f) for f in corpus]


@pytest.fixture(scope="session")
def multiblock_frames():
    return multiblock_corpus()


@pytest.fixture(scope="session")
def verdict_frames():
    return verdict_corpus()
