import random

import pytest

from univfn.tables import FinTable


def random_table(rng: random.Random, dims, bound: int) -> FinTable:
    size = 1
    for d in dims:
        size *= d
    return FinTable(tuple(dims), [rng.randrange(bound) for _ in range(size)])


@pytest.fixture
def rng():
    return random.Random(20260415)


# -- acceptance summary ----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
