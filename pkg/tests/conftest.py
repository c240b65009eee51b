from pathlib import Path

import pytest

from dbmis import make_ecgraph

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def mono_triangle():
    return make_ecgraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)], k=1)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
