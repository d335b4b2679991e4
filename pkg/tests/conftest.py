from pathlib import Path

import pytest

from ftopa.algebra import enumerate_algebras, make_algebra

GOLDEN = Path(__file__).parent / "golden"

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def algebras():
    """Every legal algebra for 3 <= n <= 10, keyed by n."""
    return {n: [make_algebra(s) for s in enumerate_algebras(n)] for n in range(3, 11)}


@pytest.fixture(scope="session")
def golden():
    return lambda name: (GOLDEN / name).read_text()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
