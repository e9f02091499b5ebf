import pytest

from discnet import (
    MatchPolicy,
    build_bipartite,
    load_corpus,
    load_vocabulary,
    occurrence_matrix,
)

C1_CSV = (
    b"id,agent,text\n"
    b"1,A,knowledge building needs ideas\n"
    b"2,B,ideas improve through discussion\n"
    b"3,A,discussion builds knowledge\n"
)

V1_WORDS = b"knowledge\nideas\ndiscussion\n"


@pytest.fixture
def policy():
    return MatchPolicy()


@pytest.fixture
def c1():
    return load_corpus(C1_CSV)


@pytest.fixture
def v1():
    return load_vocabulary(V1_WORDS)


@pytest.fixture
def c1_matrix(c1, v1, policy):
    return occurrence_matrix(c1, v1, policy)


@pytest.fixture
def c1_bip(c1_matrix, c1, v1):
    return build_bipartite(c1_matrix, c1, v1)
