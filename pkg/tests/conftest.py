import pytest

from solowswan import BertalanffyParams, ClassicalParams, CobbDouglas

ACCEPTANCE_LINES = []


@pytest.fixture
def fig1a():
    return ClassicalParams(CobbDouglas.from_degree(0.5, 0.8), s=0.4, gamma=0.7, L0=1.0, k0=1.0)


@pytest.fixture
def fig2a():
    return BertalanffyParams(CobbDouglas.from_degree(0.5, 0.8), s=0.4, r=0.9, Linf=5.0, L0=1.0, k0=1.0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
