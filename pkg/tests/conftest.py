import random

import pytest
from hypothesis import strategies as st

from chw.group import GroupElement
from chw.words import ReducedWord


@pytest.fixture
def rng():
    return random.Random(20240501)


def words(n, max_len=6):
    return st.lists(st.integers(1, n), max_size=max_len).map(lambda ls: ReducedWord.from_letters(n, ls))


def elements(n, max_len=6, box=3):
    return st.builds(
        GroupElement,
        words(n, max_len),
        st.tuples(*[st.integers(-box, box) for _ in range(n)]),
    )


def vectors(n, box=5):
    return st.tuples(*[st.integers(-box, box) for _ in range(n)])


# one line per acceptance criterion, collected by test_acceptance.report
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
