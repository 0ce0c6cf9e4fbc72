import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cobarlab.loop_group import Word, reduce_letters
from cobarlab.simplicial import model

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

REDUCED_MODELS = ("sphere2", "sphere3", "deltabar2", "deltabar3", "deltabar4")


@pytest.fixture
def rng():
    return random.Random(1234)


def words(X, n: int, max_len: int = 3):
    """Strategy for reduced words of degree n in GX (letters may cancel or vanish)."""
    letters = st.tuples(st.sampled_from(X.simplices(n + 1)), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_len).map(lambda ls: Word(n, reduce_letters(ls)))


def nondegenerate_words(G, n: int, max_len: int = 3):
    gens = [x for x in G.X.simplices(n + 1) if not (x.degens and x.degens[-1] == 0)]
    letters = st.tuples(st.sampled_from(gens), st.sampled_from((1, -1)))
    return (st.lists(letters, min_size=1, max_size=max_len)
            .map(lambda ls: Word(n, reduce_letters(ls)))
            .filter(lambda w: w.letters and not G.is_degenerate(w)))


@pytest.fixture(params=REDUCED_MODELS)
def reduced_model(request):
    return model(request.param)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
