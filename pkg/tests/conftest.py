import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pokervar.videopoker import DEUCES_WILD_FULL_PAY, JACKS_OR_BETTER_9_6, solve_game  # noqa: E402

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


class Solved:
    def __init__(self, pay):
        start = time.perf_counter()
        self.table = solve_game(pay)
        self.seconds = time.perf_counter() - start


@pytest.fixture(scope="session")
def jacks():
    return Solved(JACKS_OR_BETTER_9_6)


@pytest.fixture(scope="session")
def deuces():
    return Solved(DEUCES_WILD_FULL_PAY)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
