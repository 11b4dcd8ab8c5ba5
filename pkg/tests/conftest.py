import pytest

from estar.graph import circulant, cycle_labeling, gstar


@pytest.fixture(scope="session")
def gstar_graph():
    return gstar()


@pytest.fixture(scope="session")
def c11():
    g = circulant(11, (1, 3))
    return g, cycle_labeling(g)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
