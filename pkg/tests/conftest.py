import contextlib
import itertools

import pytest
from hypothesis import settings, strategies as st

from qcartan import DOTTED, SOLID, Bigraph, flation
from qcartan.core import bigraph_to_matrix

# timing varies a lot on shared machines; correctness is what is under test
settings.register_profile("default", deadline=None)
settings.load_profile("default")

# two F blocks glued at s; labels s=1, r=2, x=3, y=4, x'=5, y'=6
TWO_BLOCK = Bigraph.from_spec(6, "5-6 6-1 1-2 2-3 3-4 4-1 5~1 1~3 4~2")
TWO_BLOCK_FLATED = Bigraph.from_spec(6, "2-6 6-1 1-4 4-3 6-5 1~2 2~5 5~1 1~3")


@pytest.fixture
def two_block():
    return TWO_BLOCK


@pytest.fixture
def two_block_flated():
    return TWO_BLOCK_FLATED


@contextlib.contextmanager
def strict_congruence():
    """Cross-check every closed-form flation against the full product."""
    saved, flation.DEBUG_CONGRUENCE = flation.DEBUG_CONGRUENCE, True
    try:
        yield
    finally:
        flation.DEBUG_CONGRUENCE = saved


@st.composite
def bigraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    styles = draw(st.lists(st.sampled_from([None, SOLID, DOTTED]), min_size=len(pairs), max_size=len(pairs)))
    return Bigraph(n, tuple((u, v, s) for (u, v), s in zip(pairs, styles) if s is not None))


@st.composite
def steps_for(draw, n):
    s = draw(st.integers(1, n))
    r = draw(st.integers(1, n).filter(lambda r: r != s))
    return (s, r)


def leibniz_det(rows):
    """Determinant from the permutation expansion; slow but independent."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


def matrix_rows(g):
    return [list(r) for r in bigraph_to_matrix(g).entries]


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
