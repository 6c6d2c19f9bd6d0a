import itertools

import pytest

from schubaut.rootsys import build_root_system
from schubaut.weyl import WeylWord

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []

SMALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)]
UP_TO_RANK5 = (
    [("A", n) for n in range(1, 6)]
    + [("B", n) for n in range(2, 6)]
    + [("C", n) for n in range(3, 6)]
    + [("D", n) for n in range(4, 6)]
    + [("F", 4), ("G", 2)]
)


def W(rs, *letters):
    return WeylWord(rs, letters)


def proper_subsets(n):
    for k in range(1, n):
        yield from itertools.combinations(range(1, n + 1), k)


@pytest.fixture
def A2():
    return build_root_system("A", 2)


@pytest.fixture
def G2():
    return build_root_system("G", 2)


@pytest.fixture
def C3():
    return build_root_system("C", 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
