import pytest

from torhom.recursion import MemoTable

# one line per acceptance criterion, echoed after the run even when
# output capture is active
CRITERION_LINES = []


@pytest.fixture(scope="session")
def memo():
    """One memo table shared across the whole run; values are
    deterministic, so sharing only makes the suite faster."""
    return MemoTable()


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
