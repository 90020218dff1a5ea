import random

import pytest

from acceptance_log import ACCEPTANCE_LINES


@pytest.fixture
def rng():
    return random.Random(20260416)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
