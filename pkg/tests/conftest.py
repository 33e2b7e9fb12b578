"""Shared fixtures and the acceptance-summary reporting hook."""

import pytest

from jachalf.field import ctx_new
from jachalf.jacobian import Point, curve_new

# one line per acceptance criterion, echoed after the pytest summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def f7():
    return ctx_new(7, [1])


@pytest.fixture(scope="session")
def f49():
    # F_49 = F_7[t]/(t^2 + 1), t^2 = -1
    return ctx_new(7, [1, 0, 1])


@pytest.fixture(scope="session")
def curve_g1_f7(f7):
    # y^2 = x^3 - x
    return curve_new(f7, [0, 1, 6])


@pytest.fixture(scope="session")
def curve_g2_f49(f49):
    # y^2 = x^5 - x: roots 0, 1, -1, t, -t with t^2 = -1
    t = f49.generator()
    return curve_new(f49, [f49.from_int(0), f49.from_int(1), f49.from_int(6), t, -t])


@pytest.fixture(scope="session")
def p42(curve_g1_f7):
    return Point(curve_g1_f7, 4, 2)


@pytest.fixture(scope="session")
def p10(curve_g1_f7):
    return Point(curve_g1_f7, 1, 0)
