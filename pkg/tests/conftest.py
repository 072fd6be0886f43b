import pytest
from hypothesis import settings
from hypothesis import strategies as st

from chimneys.chimney import Chimney
from chimneys.weyl import weyl_group

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

A2 = weyl_group("A2")
C2 = weyl_group("C2")
G2 = weyl_group("G2")
RANK2 = {"A2": A2, "C2": C2, "G2": G2}

# positive root indices in A2
ALPHA, BETA, ALPHA_BETA = 0, 1, 2


@pytest.fixture
def A():
    return A2


def words(W, max_len=8):
    return st.lists(st.sampled_from(W.letters), max_size=max_len)


def elements(W, max_len=8):
    return words(W, max_len).map(W.from_word)


def chimneys(W, max_y_len=3):
    subsets = st.sets(st.sampled_from(sorted(W.spherical))).map(frozenset)
    return st.builds(lambda J, y: Chimney(J, y), subsets, elements(W, max_y_len))
