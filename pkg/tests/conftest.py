import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from oam import ArithmeticMatroid, IntegerMatrix, Matroid, Multiplicity, matrix_to_oam  # noqa: E402
from oam.corpus import example_matrix, matrix_corpus  # noqa: E402
from oam.linalg import rank  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def example():
    """Oriented arithmetic matroid of [[1,1,2],[0,3,3]]."""
    return matrix_to_oam(example_matrix(3))


@pytest.fixture(scope="session")
def example_modified(example):
    """Same matroid with m(E) = 1."""
    return ArithmeticMatroid(example.matroid, example.m.replace(0b111, 1))


@pytest.fixture(scope="session")
def u24():
    return ArithmeticMatroid(Matroid.uniform(2, 4), Multiplicity.constant(4))


@pytest.fixture(scope="session")
def corpus():
    return matrix_corpus()


@pytest.fixture(scope="session")
def corpus_oams(corpus):
    return [matrix_to_oam(m) for m in corpus]


@st.composite
def full_rank_matrices(draw, max_r=3, max_n=5, bound=4):
    r = draw(st.integers(1, max_r))
    n = draw(st.integers(r, max_n))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                         min_size=r, max_size=r))
    from hypothesis import assume

    assume(rank(rows) == r)
    return IntegerMatrix.of(rows, n)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            for key, text in getattr(rep, "user_properties", []):
                if key == "criterion" and rep.when == "call":
                    lines.append((text, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for text, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {text}")
