import pytest

from klmatroids import direct_sum, uniform
from klmatroids.census import labeled_matroids

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus5():
    return [M for n in range(1, 6) for M in labeled_matroids(n)]


@pytest.fixture(scope="session")
def corpus6():
    return [M for n in range(1, 7) for M in labeled_matroids(n)]


@pytest.fixture(scope="session")
def small_corpus():
    return [M for n in range(1, 5) for M in labeled_matroids(n)]


@pytest.fixture
def u12xu12():
    return direct_sum(uniform(1, 2), uniform(1, 2))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
